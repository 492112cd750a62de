#ifndef STOPSET_CODE_HPP
#define STOPSET_CODE_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "stopset/matrix.hpp"
#include "stopset/perm.hpp"

namespace stopset {
namespace detail {

// GF(2)[x] on uint64 coefficient masks, bit i = coefficient of x^i (degree <= 62).

inline int poly_degree(std::uint64_t p) { return p ? 63 - std::countl_zero(p) : -1; }

inline std::uint64_t poly_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    for (int i = 0; b >> i; ++i)
        if ((b >> i) & 1u) r ^= a << i;
    return r;
}

inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    const int db = poly_degree(b);
    while (a && poly_degree(a) >= db) a ^= b << (poly_degree(a) - db);
    return a;
}

inline std::uint64_t poly_div(std::uint64_t a, std::uint64_t b) {
    std::uint64_t q = 0;
    const int db = poly_degree(b);
    while (a && poly_degree(a) >= db) {
        const int s = poly_degree(a) - db;
        q |= std::uint64_t(1) << s;
        a ^= b << s;
    }
    return q;
}

inline std::uint64_t poly_reciprocal(std::uint64_t p) {
    const int d = poly_degree(p);
    std::uint64_t r = 0;
    for (int i = 0; i <= d; ++i)
        if ((p >> i) & 1u) r |= std::uint64_t(1) << (d - i);
    return r;
}

}  // namespace detail

/// Generator polynomial of the [23,12,7] binary Golay code:
/// x^11 + x^9 + x^7 + x^6 + x^5 + x + 1 (octal 5343).
inline constexpr std::uint64_t kGolay23Generator = 0b101011100011;

/// Generator polynomial of the triple-error-correcting [31,16,7] BCH code,
/// octal 107657 (product of the minimal polynomials of alpha, alpha^3,
/// alpha^5 over GF(32) built on x^5 + x^2 + 1).
inline constexpr std::uint64_t kBch31_16Generator = 0b1000111110101111;

/// Generator polynomial of the [7,4,3] Hamming code: x^3 + x + 1.
inline constexpr std::uint64_t kHamming7Generator = 0b1011;

/// The paper's octal form of the BCH cog word, most significant bit leftmost.
inline constexpr const char* kBch31_16CogOctal = "14140500022";

/// An [n,k] binary linear code held as a generator/parity matrix pair with
/// G H^T = 0. The cyclic flag asserts closure under the full cyclic shift;
/// the extended flag marks an overall parity bit stored at coordinate n-1
/// (such codes are closed under the shift that fixes n-1 instead).
class LinearCode {
   public:
    static LinearCode from_generator(const BitMatrix& g, bool cyclic = false, bool extended = false) {
        const std::size_t k = g.rows();
        if (rank(g) != k) throw std::invalid_argument("LinearCode: generator rows must be independent");
        auto h = nullspace_basis(g);
        return LinearCode(g, h, k, cyclic, extended);
    }

    static LinearCode from_parity(const BitMatrix& h, bool cyclic = false, bool extended = false) {
        const std::size_t r = h.rows();
        if (rank(h) != r) throw std::invalid_argument("LinearCode: parity rows must be independent");
        auto g = nullspace_basis(h);
        return LinearCode(g, h, g.rows(), cyclic, extended);
    }

    /// Both matrices supplied by the caller; ranks and orthogonality are
    /// still verified.
    static LinearCode from_pair(const BitMatrix& g, const BitMatrix& h, bool cyclic = false,
                                bool extended = false) {
        if (rank(g) != g.rows()) throw std::invalid_argument("LinearCode: generator rows must be independent");
        if (rank(h) != h.rows()) throw std::invalid_argument("LinearCode: parity rows must be independent");
        return LinearCode(g, h, g.rows(), cyclic, extended);
    }

    std::size_t n() const noexcept { return g_.cols(); }
    std::size_t k() const noexcept { return k_; }
    std::size_t redundancy() const noexcept { return n() - k_; }
    const BitMatrix& generator() const noexcept { return g_; }
    const BitMatrix& parity() const noexcept { return h_; }
    bool is_cyclic() const noexcept { return cyclic_; }
    bool is_extended() const noexcept { return extended_; }

    bool contains(const BitVector& word) const { return syndrome(h_, word).is_zero(); }

    BitVector encode(const BitVector& message) const {
        if (message.size() != k_) throw std::invalid_argument("encode: message length must equal k");
        BitVector c(n());
        for (std::size_t i = 0; i < k_; ++i)
            if (message.get(i)) c ^= g_.row(i);
        return c;
    }

    /// Visits all 2^k codewords in Gray-code order (one row XOR per step).
    /// Needs k small enough to enumerate; callers guard with the 2^16 budget.
    void for_each_codeword(const std::function<void(const BitVector&)>& fn) const {
        if (k_ > 20) throw std::invalid_argument("for_each_codeword: enumeration budget exceeded (k > 20)");
        BitVector w(n());
        fn(w);
        for (std::uint64_t i = 1; i < (std::uint64_t(1) << k_); ++i) {
            w ^= g_.row(static_cast<std::size_t>(std::countr_zero(i)));
            fn(w);
        }
    }

    std::map<std::size_t, std::uint64_t> weight_distribution() const {
        std::map<std::size_t, std::uint64_t> dist;
        for_each_codeword([&](const BitVector& w) { ++dist[w.weight()]; });
        return dist;
    }

    std::size_t minimum_distance() const {
        if (!d_) {
            std::size_t best = n();
            for_each_codeword([&](const BitVector& w) {
                const std::size_t wt = w.weight();
                if (wt > 0 && wt < best) best = wt;
            });
            d_ = best;
        }
        return *d_;
    }

   private:
    LinearCode(BitMatrix g, BitMatrix h, std::size_t k, bool cyclic, bool extended)
        : g_(std::move(g)), h_(std::move(h)), k_(k), cyclic_(cyclic), extended_(extended) {
        if (g_.cols() != h_.cols()) throw std::invalid_argument("LinearCode: G/H width mismatch");
        if (h_.rows() != g_.cols() - k_) throw std::invalid_argument("LinearCode: parity row count mismatch");
        for (std::size_t i = 0; i < g_.rows(); ++i)
            for (std::size_t j = 0; j < h_.rows(); ++j)
                if (g_.row(i).dot(h_.row(j))) throw std::invalid_argument("LinearCode: G H^T != 0");
    }

    static BitMatrix nullspace_basis(const BitMatrix& m) {
        const std::size_t n = m.cols();
        auto rr = row_reduce(m, ZeroRows::Drop);
        const auto& pivots = rr.pivots;
        std::vector<bool> is_pivot(n, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<BitVector> basis;
        for (std::size_t free = 0; free < n; ++free) {
            if (is_pivot[free]) continue;
            BitVector v(n);
            v.set(free, true);
            for (std::size_t p = 0; p < pivots.size(); ++p)
                if (rr.reduced.get(p, free)) v.set(pivots[p], true);
            basis.push_back(std::move(v));
        }
        if (basis.empty()) throw std::invalid_argument("LinearCode: trivial nullspace");
        return BitMatrix(std::move(basis));
    }

    BitMatrix g_;
    BitMatrix h_;
    std::size_t k_;
    bool cyclic_;
    bool extended_;
    mutable std::optional<std::size_t> d_;
};

/// Cyclic [n, n-deg(g)] code from a generator polynomial g | x^n - 1.
/// Generator rows are the shifts x^i g(x); parity rows are shifts of the
/// reciprocal of the check polynomial h = (x^n - 1)/g.
inline LinearCode cyclic_code(std::size_t n, std::uint64_t g) {
    if (n < 2 || n > 62) throw std::invalid_argument("cyclic_code: n must be in [2, 62]");
    if (g == 0) throw std::invalid_argument("cyclic_code: zero generator polynomial");
    const std::uint64_t xn1 = (std::uint64_t(1) << n) | 1u;
    if (detail::poly_mod(xn1, g) != 0)
        throw std::invalid_argument("cyclic_code: generator polynomial does not divide x^n - 1");
    const std::size_t deg = static_cast<std::size_t>(detail::poly_degree(g));
    if (deg == 0 || deg >= n) throw std::invalid_argument("cyclic_code: generator degree out of range");
    const std::size_t k = n - deg;

    std::vector<BitVector> grows;
    for (std::size_t i = 0; i < k; ++i) grows.push_back(BitVector::from_mask(g << i, n));
    const std::uint64_t hrec = detail::poly_reciprocal(detail::poly_div(xn1, g));
    std::vector<BitVector> hrows;
    for (std::size_t i = 0; i < n - k; ++i) hrows.push_back(BitVector::from_mask(hrec << i, n));

    return LinearCode::from_pair(BitMatrix(std::move(grows)), BitMatrix(std::move(hrows)), true, false);
}

/// Swaps the generator and parity roles; Aut(C) = Aut(dual(C)).
inline LinearCode dual(const LinearCode& c) {
    return LinearCode::from_pair(c.parity(), c.generator(), c.is_cyclic(), c.is_extended());
}

/// Appends an overall parity bit at the new last coordinate n.
inline LinearCode extend(const LinearCode& c) {
    const std::size_t n = c.n();
    std::vector<BitVector> grows;
    for (std::size_t i = 0; i < c.k(); ++i) {
        BitVector r(n + 1);
        for (std::size_t j = 0; j < n; ++j) r.set(j, c.generator().get(i, j));
        r.set(n, c.generator().row(i).weight() % 2 != 0);
        grows.push_back(std::move(r));
    }
    std::vector<BitVector> hrows;
    BitVector ones(n + 1);
    for (std::size_t j = 0; j <= n; ++j) ones.set(j, true);
    hrows.push_back(std::move(ones));
    for (std::size_t i = 0; i < c.parity().rows(); ++i) {
        BitVector r(n + 1);
        for (std::size_t j = 0; j < n; ++j) r.set(j, c.parity().get(i, j));
        hrows.push_back(std::move(r));
    }
    return LinearCode::from_pair(BitMatrix(std::move(grows)), BitMatrix(std::move(hrows)), false, true);
}

/// All codewords of Hamming weight exactly w, in lexicographic order
/// (coordinate 0 most significant).
inline std::vector<BitVector> min_weight_words(const LinearCode& c, std::size_t w) {
    if (w < 1) throw std::invalid_argument("min_weight_words: weight must be >= 1");
    if (c.k() > 16) throw std::invalid_argument("min_weight_words: enumeration budget exceeded (k > 16)");
    std::vector<BitVector> out;
    c.for_each_codeword([&](const BitVector& word) {
        if (word.weight() == w) out.push_back(word);
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// The 12x24 parity-check matrix [I12 | M] of the [24,12,8] Golay code, with
/// M the 4x4 arrangement of 3x3 blocks I3, A, A^2, A^4 over GF(2),
/// A = ((1,1,1),(1,0,0),(1,0,1)).
inline BitMatrix golay24_wolfmann() {
    using Block = std::array<std::array<int, 3>, 3>;
    auto mul = [](const Block& x, const Block& y) {
        Block r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int s = 0;
                for (int t = 0; t < 3; ++t) s ^= x[i][t] & y[t][j];
                r[i][j] = s;
            }
        return r;
    };
    const Block a{{{1, 1, 1}, {1, 0, 0}, {1, 0, 1}}};
    const Block i3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    const Block a2 = mul(a, a);
    const Block a4 = mul(a2, a2);
    const std::array<std::array<const Block*, 4>, 4> layout{{{&i3, &a, &a2, &a4},
                                                             {&a, &i3, &a4, &a2},
                                                             {&a2, &a4, &i3, &a},
                                                             {&a4, &a2, &a, &i3}}};
    BitMatrix h(12, 24);
    for (std::size_t r = 0; r < 12; ++r) {
        h.set(r, r, true);
        for (std::size_t bj = 0; bj < 4; ++bj) {
            const Block& blk = *layout[r / 3][bj];
            for (std::size_t j = 0; j < 3; ++j)
                if (blk[r % 3][j]) h.set(r, 12 + 3 * bj + j, true);
        }
    }
    return h;
}

/// Row-reduces the parity matrix into systematic [A|I] form, identity on the
/// last n-k columns, so k..n-1 are the check positions of classical
/// permutation decoding. Throws when that column block is singular.
inline BitMatrix systematic_parity(const LinearCode& c) {
    const std::size_t r = c.parity().rows();
    const std::size_t k = c.k();
    std::vector<BitVector> rows = c.parity().row_list();
    for (std::size_t j = 0; j < r; ++j) {
        std::size_t pivot = j;
        while (pivot < r && !rows[pivot].get(k + j)) ++pivot;
        if (pivot == r)
            throw std::invalid_argument("systematic_parity: last n-k columns of H are singular");
        std::swap(rows[j], rows[pivot]);
        for (std::size_t i = 0; i < r; ++i)
            if (i != j && rows[i].get(k + j)) rows[i] ^= rows[j];
    }
    return BitMatrix(std::move(rows));
}

/// True iff permuting the coordinates of every generator row yields a
/// codeword (sufficient by linearity).
inline bool is_automorphism(const LinearCode& c, const Permutation& p) {
    if (p.degree() != c.n()) throw std::invalid_argument("is_automorphism: degree mismatch");
    for (std::size_t i = 0; i < c.generator().rows(); ++i)
        if (!c.contains(apply(p, c.generator().row(i)))) return false;
    return true;
}

}  // namespace stopset

#endif
