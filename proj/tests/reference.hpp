// Test-only reference implementations, deliberately unpacked and simple so
// they stay independent of the bit-packed library paths they cross-check.
#ifndef STOPSET_TESTS_REFERENCE_HPP
#define STOPSET_TESTS_REFERENCE_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "stopset/matrix.hpp"

namespace ref {

using IntMatrix = std::vector<std::vector<int>>;

inline IntMatrix to_int_matrix(const stopset::BitMatrix& m) {
    IntMatrix out(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c) ? 1 : 0;
    return out;
}

inline std::size_t naive_rank(IntMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && m[r][col])
                for (std::size_t c = 0; c < cols; ++c) m[r][c] ^= m[rank][c];
        ++rank;
    }
    return rank;
}

// Peeling with a caller-controlled removal order: each round removes one
// removable index chosen by (round + salt) % candidates. Confluence says the
// fixed point is order-independent.
inline std::vector<int> naive_peel(const IntMatrix& h, std::vector<int> erased_flags, std::uint64_t salt) {
    const std::size_t cols = erased_flags.size();
    std::mt19937_64 rng(salt);
    for (;;) {
        std::vector<std::size_t> removable;
        for (const auto& row : h) {
            std::size_t count = 0, where = 0;
            for (std::size_t c = 0; c < cols; ++c)
                if (row[c] && erased_flags[c]) {
                    ++count;
                    where = c;
                }
            if (count == 1) removable.push_back(where);
        }
        std::sort(removable.begin(), removable.end());
        removable.erase(std::unique(removable.begin(), removable.end()), removable.end());
        if (removable.empty()) return erased_flags;
        erased_flags[removable[rng() % removable.size()]] = 0;
    }
}

// All codewords of the span of the given generator rows, by message counting.
inline std::vector<std::vector<int>> span_words(const IntMatrix& g, std::size_t n) {
    std::vector<std::vector<int>> words;
    const std::size_t k = g.size();
    for (std::uint64_t msg = 0; msg < (std::uint64_t(1) << k); ++msg) {
        std::vector<int> w(n, 0);
        for (std::size_t i = 0; i < k; ++i)
            if ((msg >> i) & 1u)
                for (std::size_t c = 0; c < n; ++c) w[c] ^= g[i][c];
        words.push_back(std::move(w));
    }
    return words;
}

inline bool is_stopping_subset(const IntMatrix& h, std::uint64_t mask, std::size_t n) {
    if (!mask) return false;
    for (const auto& row : h) {
        std::size_t count = 0;
        for (std::size_t c = 0; c < n; ++c)
            if (((mask >> c) & 1u) && row[c]) ++count;
        if (count == 1) return false;
    }
    return true;
}

// Union of all stopping subsets of the given set (unions of stopping sets
// are stopping sets, so this is the unique maximal one).
inline std::uint64_t maximal_stopping_subset(const IntMatrix& h, std::uint64_t set_mask, std::size_t n) {
    std::uint64_t out = 0;
    for (std::uint64_t sub = set_mask;; sub = (sub - 1) & set_mask) {
        if (is_stopping_subset(h, sub, n)) out |= sub;
        if (sub == 0) break;
    }
    return out;
}

}  // namespace ref

#endif
