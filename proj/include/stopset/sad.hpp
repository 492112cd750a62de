#ifndef STOPSET_SAD_HPP
#define STOPSET_SAD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stopset/matrix.hpp"
#include "stopset/pattern.hpp"
#include "stopset/perm.hpp"
#include "stopset/stopping.hpp"

namespace stopset {

/// What "the coordinates do not correspond to a stopping set" is taken to
/// mean. Containment (the default) requires the set to contain no nonempty
/// stopping set at all, i.e. peeling clears it, which is what decodability
/// needs. ExactSet only asks that the set is not itself a stopping set.
enum class ResolveRule { Containment, ExactSet };

inline bool resolves(const BitMatrix& h, const ErasurePattern& s, ResolveRule rule = ResolveRule::Containment) {
    if (s.empty()) return true;
    if (rule == ResolveRule::ExactSet) return !is_stopping_set(h, s);
    return peel(h, s).empty();
}

/// Outcome of checking or searching an s-SAD set for a matrix.
struct SadResult {
    std::size_t s = 0;
    PermSet set{1};
    bool verified = false;
    /// Sampled witness pairs (b-set, index of a covering permutation).
    std::vector<std::pair<ErasurePattern, std::size_t>> certificate;
    /// A b-set no permutation resolves, when verification fails.
    std::optional<ErasurePattern> counterexample;
};

class CoverageError : public std::runtime_error {
   public:
    CoverageError(const std::string& what, ErasurePattern uncoverable)
        : std::runtime_error(what), uncoverable_(std::move(uncoverable)) {}
    const ErasurePattern& uncoverable() const noexcept { return uncoverable_; }

   private:
    ErasurePattern uncoverable_;
};

/// Def.-3.1 check: every b-set with b <= s is moved by some member of the set
/// into positions that h resolves. Enumerates all Sum_{b<=s} C(n,b) sets; at
/// most certificate_cap witness pairs are recorded.
inline SadResult verify_sad(const BitMatrix& h, const PermSet& set, std::size_t s,
                            ResolveRule rule = ResolveRule::Containment, std::size_t certificate_cap = 0) {
    const std::size_t n = h.cols();
    if (set.degree() != n) throw std::invalid_argument("verify_sad: degree mismatch");
    if (s < 1 || s > n) throw std::invalid_argument("verify_sad: s out of range");
    if (n > 62) throw std::invalid_argument("verify_sad: enumeration budget is n <= 62");

    const auto kernel = detail::MaskRows::from(h);
    std::vector<const std::vector<std::uint32_t>*> images;
    for (const auto& p : set) images.push_back(&p.images());

    auto resolved_by = [&](std::uint64_t b) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < images.size(); ++i) {
            const std::uint64_t moved = detail::apply_mask(*images[i], b);
            const bool ok = rule == ResolveRule::Containment ? kernel.peel(moved) == 0
                                                             : !kernel.is_stopping(moved);
            if (ok) return i;
        }
        return std::nullopt;
    };

    SadResult result;
    result.s = s;
    result.set = set;
    result.verified = true;
    for (std::size_t b = 1; b <= s; ++b) {
        std::uint64_t mask = detail::colex_first(b);
        for (std::uint64_t i = binomial(n, b); i > 0; --i, mask = detail::colex_next(mask)) {
            const auto cover = resolved_by(mask);
            if (!cover) {
                result.verified = false;
                result.counterexample = ErasurePattern::from_mask(mask, n);
                return result;
            }
            if (result.certificate.size() < certificate_cap)
                result.certificate.emplace_back(ErasurePattern::from_mask(mask, n), *cover);
        }
    }
    return result;
}

/// Greedy set cover over the b-sets (b <= s) that the identity leaves
/// unresolved: each candidate covers the b-sets it moves into resolvable
/// positions; the candidate covering the most uncovered sets is taken each
/// round, ties broken by candidate order. The identity is part of the result
/// whenever it resolves anything. Throws CoverageError if some b-set no
/// candidate covers.
inline SadResult greedy_sad(const BitMatrix& h, const PermSet& candidates, std::size_t s,
                            ResolveRule rule = ResolveRule::Containment) {
    const std::size_t n = h.cols();
    if (candidates.degree() != n) throw std::invalid_argument("greedy_sad: degree mismatch");
    if (s < 1 || s > n) throw std::invalid_argument("greedy_sad: s out of range");
    if (n > 62) throw std::invalid_argument("greedy_sad: enumeration budget is n <= 62");

    const auto kernel = detail::MaskRows::from(h);
    auto resolves_mask = [&](std::uint64_t m) {
        return rule == ResolveRule::Containment ? kernel.peel(m) == 0 : !kernel.is_stopping(m);
    };

    // Universe: b-sets the identity does not resolve.
    std::vector<std::uint64_t> universe;
    bool identity_resolves_something = false;
    for (std::size_t b = 1; b <= s; ++b) {
        std::uint64_t mask = detail::colex_first(b);
        for (std::uint64_t i = binomial(n, b); i > 0; --i, mask = detail::colex_next(mask)) {
            if (resolves_mask(mask))
                identity_resolves_something = true;
            else
                universe.push_back(mask);
        }
    }

    SadResult result;
    result.s = s;
    result.set = PermSet(n);
    if (identity_resolves_something) result.set.add(Permutation::identity(n));
    if (universe.empty()) {
        result.verified = true;
        return result;
    }

    // Coverage bitmap per candidate over the universe.
    const std::size_t words = (universe.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> covers(candidates.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        const auto& images = candidates[ci].images();
        for (std::size_t u = 0; u < universe.size(); ++u)
            if (resolves_mask(detail::apply_mask(images, universe[u])))
                covers[ci][u / 64] |= std::uint64_t(1) << (u % 64);
    }

    std::vector<std::uint64_t> uncovered(words, ~std::uint64_t(0));
    if (universe.size() % 64) uncovered[words - 1] = (std::uint64_t(1) << (universe.size() % 64)) - 1;

    auto popcount_and = [&](const std::vector<std::uint64_t>& cover) {
        std::uint64_t c = 0;
        for (std::size_t w = 0; w < words; ++w) c += static_cast<std::uint64_t>(std::popcount(cover[w] & uncovered[w]));
        return c;
    };

    std::uint64_t remaining = universe.size();
    while (remaining > 0) {
        std::size_t best = candidates.size();
        std::uint64_t best_gain = 0;
        for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
            const std::uint64_t gain = popcount_and(covers[ci]);
            if (gain > best_gain) {
                best_gain = gain;
                best = ci;
            }
        }
        if (best == candidates.size()) {
            for (std::size_t w = 0; w < words; ++w)
                if (uncovered[w]) {
                    const std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(uncovered[w]));
                    throw CoverageError("greedy_sad: candidates cannot cover every b-set",
                                        ErasurePattern::from_mask(universe[u], n));
                }
        }
        for (std::size_t w = 0; w < words; ++w) uncovered[w] &= ~covers[best][w];
        remaining -= best_gain;
        result.set.add(candidates[best]);
    }
    result.verified = true;
    return result;
}

/// Lemma-3.1 expansion: one column-permuted copy of h per set member, so that
/// peeling the stack equals being peelable under some member's frame;
/// duplicate rows are removed. Every member must be an automorphism of the
/// code of h.
inline BitMatrix expand_by_perms(const BitMatrix& h, const PermSet& set) {
    if (set.degree() != h.cols()) throw std::invalid_argument("expand_by_perms: degree mismatch");
    if (set.empty()) throw std::invalid_argument("expand_by_perms: empty permutation set");

    const LinearCode code_of_h = LinearCode::from_generator(row_reduce(h, ZeroRows::Drop).reduced);
    // rows of h span the dual; automorphisms must fix the dual (= fix the code)
    for (const auto& p : set)
        if (!is_automorphism(code_of_h, p))
            throw std::invalid_argument("expand_by_perms: set contains a non-automorphism");

    std::vector<BitVector> rows;
    rows.reserve(set.size() * h.rows());
    for (const auto& p : set) {
        for (std::size_t r = 0; r < h.rows(); ++r) {
            const BitVector& src = h.row(r);
            BitVector permuted(h.cols());
            for (std::size_t i = 0; i < h.cols(); ++i)
                if (src.get(p(static_cast<std::uint32_t>(i)))) permuted.set(i, true);
            rows.push_back(std::move(permuted));
        }
    }
    return dedupe_rows(BitMatrix(std::move(rows)));
}

}  // namespace stopset

#endif
