#ifndef STOPSET_STOPPING_HPP
#define STOPSET_STOPPING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "stopset/code.hpp"
#include "stopset/cog.hpp"
#include "stopset/matrix.hpp"
#include "stopset/pattern.hpp"
#include "stopset/perm.hpp"

namespace stopset {

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace detail {

// Enumeration/peeling kernels on single-word masks; all matrices in this
// project fit n <= 64.

struct MaskRows {
    std::vector<std::uint64_t> rows;
    std::size_t n;

    static MaskRows from(const BitMatrix& h) {
        if (h.cols() > 64) throw std::invalid_argument("mask kernel: matrices wider than 64 unsupported");
        MaskRows m;
        m.n = h.cols();
        m.rows.reserve(h.rows());
        for (std::size_t r = 0; r < h.rows(); ++r) m.rows.push_back(h.row(r).as_mask());
        return m;
    }

    // Peeling fixed point: repeatedly clear any index that is the single
    // erased position of some row.
    std::uint64_t peel(std::uint64_t e) const {
        bool changed = true;
        while (e && changed) {
            changed = false;
            for (const std::uint64_t r : rows) {
                const std::uint64_t t = r & e;
                if (t && (t & (t - 1)) == 0) {
                    e &= ~t;
                    changed = true;
                    if (!e) return 0;
                }
            }
        }
        return e;
    }

    std::uint64_t peel_counting(std::uint64_t e, std::size_t& sweeps) const {
        bool changed = true;
        while (e && changed) {
            changed = false;
            for (const std::uint64_t r : rows) {
                const std::uint64_t t = r & e;
                if (t && (t & (t - 1)) == 0) {
                    e &= ~t;
                    changed = true;
                }
            }
            if (changed) ++sweeps;
        }
        return e;
    }

    // No row meets the set in exactly one position (and the set is nonempty).
    bool is_stopping(std::uint64_t e) const {
        if (!e) return false;
        for (const std::uint64_t r : rows) {
            const std::uint64_t t = r & e;
            if (t && (t & (t - 1)) == 0) return false;
        }
        return true;
    }
};

// Column masks (over row indices) for incremental rank checks.
inline std::vector<std::uint64_t> column_masks(const BitMatrix& h) {
    if (h.rows() > 64) throw std::invalid_argument("column_masks: more than 64 rows unsupported");
    std::vector<std::uint64_t> cols(h.cols(), 0);
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h.get(r, j)) cols[j] |= std::uint64_t(1) << r;
    return cols;
}

// True iff the columns indexed by e are linearly independent.
inline bool columns_independent(const std::vector<std::uint64_t>& cols, std::uint64_t e) {
    std::uint64_t basis[64];
    std::size_t sz = 0;
    while (e) {
        const unsigned j = static_cast<unsigned>(std::countr_zero(e));
        e &= e - 1;
        std::uint64_t v = cols[j];
        for (std::size_t b = 0; b < sz; ++b) {
            const std::uint64_t reduced = v ^ basis[b];
            if (reduced < v) v = reduced;
        }
        if (!v) return false;
        basis[sz++] = v;
        // keep basis sorted descending by leading bit for the reduction above
        for (std::size_t b = sz - 1; b > 0 && basis[b] > basis[b - 1]; --b) std::swap(basis[b], basis[b - 1]);
    }
    return true;
}

inline std::uint64_t colex_first(std::size_t sigma) { return (std::uint64_t(1) << sigma) - 1; }

// Next sigma-subset mask in colexicographic order (Gosper's hack).
inline std::uint64_t colex_next(std::uint64_t mask) {
    const std::uint64_t u = mask & (~mask + 1);
    const std::uint64_t v = mask + u;
    return v | (((v ^ mask) / u) >> 2);
}

// The rank-th sigma-subset in colex order.
inline std::uint64_t colex_unrank(std::uint64_t rank_index, std::size_t sigma) {
    std::uint64_t mask = 0;
    for (std::size_t t = sigma; t >= 1; --t) {
        std::size_t c = t - 1;
        while (binomial(c + 1, t) <= rank_index) ++c;
        mask |= std::uint64_t(1) << c;
        rank_index -= binomial(c, t);
    }
    return mask;
}

// Forward image of a mask under a permutation.
inline std::uint64_t apply_mask(const std::vector<std::uint32_t>& images, std::uint64_t e) {
    std::uint64_t out = 0;
    while (e) {
        out |= std::uint64_t(1) << images[static_cast<std::size_t>(std::countr_zero(e))];
        e &= e - 1;
    }
    return out;
}

}  // namespace detail

/// Def.-2.1 test: the restriction of h to s contains no row of weight one.
/// The empty set is not a stopping set.
inline bool is_stopping_set(const BitMatrix& h, const ErasurePattern& s) {
    if (s.ambient() != h.cols()) throw std::invalid_argument("is_stopping_set: ambient mismatch");
    if (s.empty()) return false;
    return detail::MaskRows::from(h).is_stopping(s.mask());
}

/// Peeling fixed point; the residual is empty exactly when the pattern is
/// iteratively decodable, and otherwise is the maximal stopping set inside e.
inline ErasurePattern peel(const BitMatrix& h, const ErasurePattern& e) {
    if (e.ambient() != h.cols()) throw std::invalid_argument("peel: ambient mismatch");
    return ErasurePattern::from_mask(detail::MaskRows::from(h).peel(e.mask()), h.cols());
}

/// Smallest stopping-set size up to the bound, by exhaustive enumeration in
/// colex order with early exit at the first size that has a hit.
inline std::optional<std::size_t> stopping_distance(const BitMatrix& h, std::size_t bound) {
    if (bound > h.cols()) throw std::invalid_argument("stopping_distance: bound exceeds column count");
    if (h.cols() > 62) throw std::invalid_argument("stopping_distance: enumeration budget is n <= 62");
    const auto kernel = detail::MaskRows::from(h);
    for (std::size_t sigma = 1; sigma <= bound; ++sigma) {
        std::uint64_t mask = detail::colex_first(sigma);
        for (std::uint64_t i = binomial(h.cols(), sigma); i > 0; --i, mask = detail::colex_next(mask))
            if (kernel.is_stopping(mask)) return sigma;
    }
    return std::nullopt;
}

enum class UndecodableMode { Peeling, Ml, Agd };

inline const char* to_string(UndecodableMode m) {
    switch (m) {
        case UndecodableMode::Peeling: return "peeling";
        case UndecodableMode::Ml: return "ml";
        case UndecodableMode::Agd: return "agd";
    }
    return "?";
}

/// Number of sigma-subsets that are undecodable:
///  - Peeling: nonempty peel residual (contains a stopping set of h);
///  - Ml: the restricted columns are dependent (h must be a full-rank parity
///    matrix of the code);
///  - Agd: the automorphism-group decoder over the given permutation
///    schedule (applied in order to the current pattern, partial progress
///    carried over) never reaches an empty residual.
/// Enumeration is colexicographic, chunked into contiguous ranges that may
/// run on worker threads; per-chunk counts are summed in chunk order.
inline std::uint64_t count_undecodable(const BitMatrix& h, std::size_t sigma, UndecodableMode mode,
                                       const PermSet* agd_perms = nullptr, std::size_t threads = 0) {
    const std::size_t n = h.cols();
    if (n > 31) throw std::invalid_argument("count_undecodable: enumeration budget is n <= 31");
    if (sigma < 1 || sigma > n) throw std::invalid_argument("count_undecodable: sigma out of range");
    if (mode == UndecodableMode::Ml && rank(h) != h.rows())
        throw std::invalid_argument("count_undecodable: ml mode needs a full-rank parity matrix");
    if (mode == UndecodableMode::Agd && (agd_perms == nullptr || agd_perms->degree() != n))
        throw std::invalid_argument("count_undecodable: agd mode needs a permutation set of matching degree");

    const auto kernel = detail::MaskRows::from(h);
    const auto cols = mode == UndecodableMode::Ml ? detail::column_masks(h) : std::vector<std::uint64_t>{};
    std::vector<const std::vector<std::uint32_t>*> schedule;
    if (mode == UndecodableMode::Agd)
        for (const auto& p : *agd_perms) schedule.push_back(&p.images());

    auto undecodable = [&](std::uint64_t e) -> bool {
        switch (mode) {
            case UndecodableMode::Peeling: return kernel.peel(e) != 0;
            case UndecodableMode::Ml: return !detail::columns_independent(cols, e);
            case UndecodableMode::Agd: {
                if (schedule.empty()) return kernel.peel(e) != 0;
                std::uint64_t p = e;
                for (const auto* images : schedule) {
                    p = kernel.peel(detail::apply_mask(*images, p));
                    if (!p) return false;
                }
                return true;
            }
        }
        return false;
    };

    const std::uint64_t total = binomial(n, sigma);
    if (threads == 0) threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    threads = std::min<std::uint64_t>(threads, total);

    std::vector<std::uint64_t> partial(threads, 0);
    auto worker = [&](std::size_t t) {
        const std::uint64_t lo = total * t / threads;
        const std::uint64_t hi = total * (t + 1) / threads;
        std::uint64_t mask = detail::colex_unrank(lo, sigma);
        std::uint64_t count = 0;
        for (std::uint64_t i = lo; i < hi; ++i, mask = detail::colex_next(mask))
            if (undecodable(mask)) ++count;
        partial[t] = count;
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    std::uint64_t sum = 0;
    for (auto c : partial) sum += c;
    return sum;
}

/// One matrix's undecodable-pattern census.
struct StoppingReport {
    std::string matrix_name;
    UndecodableMode mode = UndecodableMode::Peeling;
    std::optional<std::size_t> stopping_dist;  // nullopt = none up to bound
    std::size_t bound = 0;
    std::map<std::size_t, std::uint64_t> counts;  // sigma -> undecodable patterns
};

inline void write_report_csv(std::ostream& os, const StoppingReport& report) {
    os << "sigma,count,mode,matrix\n";
    for (const auto& [sigma, count] : report.counts)
        os << sigma << ',' << count << ',' << to_string(report.mode) << ',' << report.matrix_name << '\n';
}

/// Constructive upper-bound witness for one level of the stopping redundancy
/// hierarchy: `rows` cyclic shifts of `generator` span the dual and leave no
/// stopping set smaller than `level`.
struct HierarchyRecord {
    std::size_t level = 0;
    std::size_t rows = 0;
    BitVector generator{1};
    std::vector<std::uint32_t> offsets;
    BitMatrix witness{1, 1};
};

struct HierarchySearchOptions {
    std::uint64_t seed = 1;
    std::size_t random_trials_per_generator = 200;  // after the consecutive-offset attempt
};

/// Searches cyclic-shift matrices built from the pool (dual codewords of c)
/// with at most max_rows rows for stopping distance >= level. Generators are
/// tried in lexicographic order with consecutive offsets first, then seeded
/// random offset subsets. A miss does not disprove the bound.
inline std::optional<HierarchyRecord> hierarchy_witness(const LinearCode& c, std::size_t level,
                                                        const std::vector<BitVector>& pool,
                                                        std::size_t max_rows,
                                                        HierarchySearchOptions options = {}) {
    const std::size_t n = c.n();
    const std::size_t need_rank = c.redundancy();
    if (level < 2) throw std::invalid_argument("hierarchy_witness: level must be >= 2");
    if (max_rows > n) throw std::invalid_argument("hierarchy_witness: row budget exceeds n");

    std::vector<BitVector> generators = pool;
    for (const auto& g : generators) {
        if (g.size() != n) throw std::invalid_argument("hierarchy_witness: pool length mismatch");
        if (!syndrome(c.generator(), g).is_zero())
            throw std::invalid_argument("hierarchy_witness: pool word is not a dual codeword");
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    auto qualifies = [&](const BitMatrix& m) {
        return rank(m) == need_rank && !stopping_distance(m, level - 1).has_value();
    };
    auto record = [&](const BitMatrix& m, const BitVector& g, std::vector<std::uint32_t> offs) {
        return HierarchyRecord{level, m.rows(), g, std::move(offs), m};
    };

    std::mt19937_64 rng(options.seed);
    for (std::size_t m = need_rank; m <= max_rows; ++m) {
        // Consecutive windows: shifting the window only rotates columns, so
        // offsets 0..m-1 stand for all of them. Generators that are cyclic
        // shifts of an already-tried one would repeat the same matrix up to
        // column rotation and are skipped.
        std::vector<BitVector> tried_reps;
        for (const auto& g : generators) {
            BitVector rep = g;
            for (const auto& member : detail::orbit_of(g, false))
                if (member < rep) rep = member;
            if (std::find(tried_reps.begin(), tried_reps.end(), rep) != tried_reps.end()) continue;
            tried_reps.push_back(rep);
            BitMatrix candidate = cyclic_shift_matrix(g, m);
            if (qualifies(candidate)) {
                std::vector<std::uint32_t> offs(m);
                for (std::size_t i = 0; i < m; ++i) offs[i] = static_cast<std::uint32_t>(i);
                return record(candidate, g, std::move(offs));
            }
        }
        for (const auto& g : generators) {
            for (std::size_t trial = 0; trial < options.random_trials_per_generator; ++trial) {
                std::vector<std::uint32_t> all(n);
                for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<std::uint32_t>(i);
                for (std::size_t i = 0; i < m; ++i) {
                    const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
                    std::swap(all[i], all[j]);
                }
                std::vector<std::uint32_t> offs(all.begin(), all.begin() + static_cast<long>(m));
                std::sort(offs.begin(), offs.end());
                BitMatrix candidate = cyclic_shift_matrix(g, m, &offs);
                if (qualifies(candidate)) return record(candidate, g, std::move(offs));
            }
        }
    }
    return std::nullopt;
}

}  // namespace stopset

#endif
