#ifndef STOPSET_DECODE_HPP
#define STOPSET_DECODE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stopset/code.hpp"
#include "stopset/matrix.hpp"
#include "stopset/pattern.hpp"
#include "stopset/perm.hpp"

namespace stopset {

/// The received values were impossible for the agreed channel: some fully
/// known parity check fails, so the unerased positions cannot come from a
/// codeword.
class ChannelContractViolation : public std::runtime_error {
   public:
    explicit ChannelContractViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Channel output: per-coordinate bits with an erasure mark set (BEC) or a
/// plain bit vector (BSC). Erased coordinates carry value 0 internally.
class ReceivedWord {
   public:
    static ReceivedWord bec(const BitVector& values, const ErasurePattern& erased) {
        if (erased.ambient() != values.size()) throw std::invalid_argument("ReceivedWord: ambient mismatch");
        BitVector v = values;
        for (auto i : erased.indices()) v.set(i, false);
        return ReceivedWord(std::move(v), erased.indicator());
    }

    static ReceivedWord bsc(const BitVector& values) {
        return ReceivedWord(values, BitVector(values.size()));
    }

    /// "0"/"1" per known coordinate, "?" per erased coordinate.
    static ReceivedWord from_string(std::string_view text) {
        BitVector values(text.size());
        BitVector erased(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '1')
                values.set(i, true);
            else if (text[i] == '?')
                erased.set(i, true);
            else if (text[i] != '0')
                throw std::invalid_argument("ReceivedWord: expected '0', '1' or '?'");
        }
        return ReceivedWord(std::move(values), std::move(erased));
    }

    std::string to_string() const {
        std::string s;
        s.reserve(n());
        for (std::size_t i = 0; i < n(); ++i)
            s.push_back(erased_.get(i) ? '?' : (values_.get(i) ? '1' : '0'));
        return s;
    }

    std::size_t n() const noexcept { return values_.size(); }
    const BitVector& values() const noexcept { return values_; }
    const BitVector& erased_mask() const noexcept { return erased_; }
    ErasurePattern erasures() const { return support(erased_); }
    bool has_erasures() const noexcept { return !erased_.is_zero(); }

   private:
    ReceivedWord(BitVector values, BitVector erased)
        : values_(std::move(values)), erased_(std::move(erased)) {}

    BitVector values_;
    BitVector erased_;
};

enum class DecodeStatus { Recovered, Failed };

struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::Failed;
    std::optional<BitVector> codeword;       // when recovered
    std::optional<ErasurePattern> residual;  // stuck stopping set, in the frame where decoding halted
    std::size_t permutations_tried = 0;
    std::size_t peel_iterations = 0;  // full sweeps that resolved at least one position
};

namespace detail {

struct PeelState {
    BitVector values;
    BitVector erased;
    std::size_t sweeps = 0;
};

// Value-propagating peeling: a check row with exactly one erased position
// forces that bit to the XOR of its known neighbours.
inline void peel_values(const BitMatrix& h, PeelState& st) {
    bool changed = true;
    while (changed && !st.erased.is_zero()) {
        changed = false;
        for (std::size_t r = 0; r < h.rows(); ++r) {
            const BitVector& row = h.row(r);
            std::uint64_t acc_count = 0;
            std::size_t last = 0;
            // locate erased positions on this row
            for (std::size_t w = 0; w < row.words().size(); ++w) {
                const std::uint64_t inter = row.words()[w] & st.erased.words()[w];
                acc_count += static_cast<std::uint64_t>(std::popcount(inter));
                if (inter) last = w * 64 + static_cast<std::size_t>(63 - std::countl_zero(inter));
                if (acc_count > 1) break;
            }
            if (acc_count == 1) {
                st.values.set(last, row.dot(st.values));
                st.erased.set(last, false);
                changed = true;
            }
        }
        if (changed) ++st.sweeps;
    }
}

// After the fixed point, every fully known row must check out.
inline void verify_known_rows(const BitMatrix& h, const PeelState& st) {
    for (std::size_t r = 0; r < h.rows(); ++r) {
        const BitVector& row = h.row(r);
        bool touches_erasure = false;
        for (std::size_t w = 0; w < row.words().size(); ++w)
            if (row.words()[w] & st.erased.words()[w]) {
                touches_erasure = true;
                break;
            }
        if (!touches_erasure && row.dot(st.values))
            throw ChannelContractViolation("known positions are inconsistent with the code");
    }
}

}  // namespace detail

/// Exact BEC peeling against h. Succeeds iff the erasure pattern contains no
/// nonempty stopping set of h; the failure residual is that stopping set.
inline DecodeOutcome iterative_decode(const BitMatrix& h, const ReceivedWord& y) {
    if (y.n() != h.cols()) throw std::invalid_argument("iterative_decode: length mismatch");
    detail::PeelState st{y.values(), y.erased_mask()};
    detail::peel_values(h, st);
    detail::verify_known_rows(h, st);

    DecodeOutcome out;
    out.permutations_tried = 1;
    out.peel_iterations = st.sweeps;
    if (st.erased.is_zero()) {
        if (!syndrome(h, st.values).is_zero())
            throw ChannelContractViolation("known positions are inconsistent with the code");
        out.status = DecodeStatus::Recovered;
        out.codeword = st.values;
    } else {
        out.status = DecodeStatus::Failed;
        out.residual = support(st.erased);
    }
    return out;
}

enum class ScheduleMode { AgdA, AgdB, Explicit };

/// Ordered permutation trials for automorphism-group decoding; drawn without
/// replacement, the identity first. AGD_A draws from C1 only; AGD_B exhausts
/// C1 before drawing from C2.
struct Schedule {
    ScheduleMode mode = ScheduleMode::Explicit;
    std::uint64_t seed = 0;
    std::vector<Permutation> perms;

    static Schedule explicit_list(std::vector<Permutation> perms) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            for (std::size_t j = i + 1; j < perms.size(); ++j)
                if (perms[i] == perms[j]) throw std::invalid_argument("Schedule: duplicate permutation");
        return Schedule{ScheduleMode::Explicit, 0, std::move(perms)};
    }

    static Schedule agd_a(const PermSet& c1, std::uint64_t seed) {
        return Schedule{ScheduleMode::AgdA, seed, shuffled_after_identity(c1, nullptr, seed)};
    }

    static Schedule agd_b(const PermSet& c1, const PermSet& c2, std::uint64_t seed) {
        return Schedule{ScheduleMode::AgdB, seed, shuffled_after_identity(c1, &c2, seed)};
    }

   private:
    static std::vector<Permutation> shuffled_after_identity(const PermSet& c1, const PermSet* c2,
                                                            std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::vector<Permutation> out{Permutation::identity(c1.degree())};
        auto draw_from = [&](const PermSet& pool) {
            std::vector<Permutation> rest;
            for (const auto& p : pool) {
                if (std::find(out.begin(), out.end(), p) == out.end() &&
                    std::find(rest.begin(), rest.end(), p) == rest.end())
                    rest.push_back(p);
            }
            for (std::size_t i = rest.size(); i > 1; --i)
                std::swap(rest[i - 1], rest[static_cast<std::size_t>(rng() % i)]);
            out.insert(out.end(), rest.begin(), rest.end());
        };
        draw_from(c1);
        if (c2) draw_from(*c2);
        return out;
    }
};

/// Automorphism-group decoding: peel, and while stuck apply the next schedule
/// permutation to the current (partially recovered) word and peel again.
/// Progress carries over between frames unless partial_progress is false, in
/// which case each permutation restarts from the original word. On success
/// the word is mapped back through the inverse of the composed permutation.
/// The failure residual lives in the frame where decoding halted.
inline DecodeOutcome agd_decode(const LinearCode& c, const BitMatrix& h, const Schedule& schedule,
                                const ReceivedWord& y, bool partial_progress = true,
                                bool validate_schedule = true) {
    if (y.n() != c.n() || h.cols() != c.n()) throw std::invalid_argument("agd_decode: length mismatch");
    if (validate_schedule)
        for (const auto& p : schedule.perms)
            if (!is_automorphism(c, p))
                throw std::invalid_argument("agd_decode: schedule contains a non-automorphism");

    const std::vector<Permutation> trials =
        schedule.perms.empty() ? std::vector<Permutation>{Permutation::identity(c.n())} : schedule.perms;

    DecodeOutcome out;
    detail::PeelState st{y.values(), y.erased_mask()};
    Permutation composed = Permutation::identity(c.n());

    for (const auto& p : trials) {
        if (partial_progress) {
            composed = compose(p, composed);
            st.values = apply(p, st.values);
            st.erased = apply(p, st.erased);
        } else {
            composed = p;
            st.values = apply(p, y.values());
            st.erased = apply(p, y.erased_mask());
        }
        detail::peel_values(h, st);
        detail::verify_known_rows(h, st);
        ++out.permutations_tried;
        if (st.erased.is_zero()) {
            BitVector recovered = apply(composed.inverse(), st.values);
            if (!c.contains(recovered))
                throw std::logic_error("agd_decode: recovered word fails the parity checks");
            for (std::size_t i = 0; i < y.n(); ++i)
                if (!y.erased_mask().get(i) && recovered.get(i) != y.values().get(i))
                    throw std::logic_error("agd_decode: recovered word changes a known position");
            out.status = DecodeStatus::Recovered;
            out.codeword = std::move(recovered);
            out.peel_iterations += st.sweeps;
            return out;
        }
        out.peel_iterations += st.sweeps;
        st.sweeps = 0;
    }
    out.status = DecodeStatus::Failed;
    out.residual = support(st.erased);
    return out;
}

/// Classical syndrome permutation decoding on the BSC with a systematic
/// [A|I] parity-check matrix: a syndrome of weight <= t proves the errors sit
/// in the parity positions k..n-1, where the syndrome itself corrects them.
/// Tries the identity first, then the PD-set members in order.
inline DecodeOutcome classical_pd_decode(const LinearCode& c, const BitMatrix& h_sys, const PermSet& pd,
                                         const ReceivedWord& y, std::size_t t) {
    const std::size_t n = c.n();
    const std::size_t k = c.k();
    if (h_sys.rows() != n - k || h_sys.cols() != n)
        throw std::invalid_argument("classical_pd_decode: parity matrix has wrong shape");
    for (std::size_t i = 0; i < n - k; ++i)
        for (std::size_t j = 0; j < n - k; ++j)
            if (h_sys.get(i, k + j) != (i == j))
                throw std::invalid_argument("classical_pd_decode: matrix is not in [A|I] form");
    for (std::size_t i = 0; i < h_sys.rows(); ++i)
        if (!syndrome(c.generator(), h_sys.row(i)).is_zero())
            throw std::invalid_argument("classical_pd_decode: matrix is not a parity-check matrix of the code");
    if (y.has_erasures()) throw std::invalid_argument("classical_pd_decode: BSC word must have no erasures");
    if (c.k() <= 16 && 2 * t + 1 > c.minimum_distance())
        throw std::invalid_argument("classical_pd_decode: error budget violates 2t+1 <= d");

    std::vector<const Permutation*> trials;
    const Permutation identity = Permutation::identity(n);
    trials.push_back(&identity);
    for (const auto& p : pd)
        if (!p.is_identity()) trials.push_back(&p);

    DecodeOutcome out;
    for (const auto* p : trials) {
        ++out.permutations_tried;
        const BitVector permuted = apply(*p, y.values());
        const BitVector z = syndrome(h_sys, permuted);
        if (z.weight() <= t) {
            BitVector corrected = permuted;
            for (std::size_t r = 0; r < n - k; ++r)
                if (z.get(r)) corrected.flip(k + r);
            BitVector recovered = apply(p->inverse(), corrected);
            if (!c.contains(recovered))
                throw std::logic_error("classical_pd_decode: recovered word fails the parity checks");
            out.status = DecodeStatus::Recovered;
            out.codeword = std::move(recovered);
            return out;
        }
    }
    out.status = DecodeStatus::Failed;
    return out;
}

}  // namespace stopset

#endif
