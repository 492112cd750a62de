#ifndef STOPSET_BITS_HPP
#define STOPSET_BITS_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stopset {

/// Dense GF(2) vector, bit-packed into 64-bit words. Coordinate 0 lives in
/// the lowest bit of the first word. Lexicographic comparison treats
/// coordinate 0 as the most significant position, so (0,1,...) < (1,0,...).
class BitVector {
   public:
    explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {
        if (n == 0) throw std::invalid_argument("BitVector: length must be >= 1");
    }

    static BitVector from_string(std::string_view s) {
        BitVector v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                v.set(i, true);
            else if (s[i] != '0')
                throw std::invalid_argument("BitVector: expected only '0'/'1' characters");
        }
        return v;
    }

    /// n <= 64; bit i of mask becomes coordinate i.
    static BitVector from_mask(std::uint64_t mask, std::size_t n) {
        if (n > 64) throw std::invalid_argument("BitVector::from_mask: n must be <= 64");
        BitVector v(n);
        if (n < 64 && (mask >> n) != 0) throw std::invalid_argument("BitVector::from_mask: mask wider than n");
        v.words_[0] = mask;
        return v;
    }

    std::size_t size() const noexcept { return n_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (words_[i / 64] >> (i % 64)) & 1u;
    }

    void set(std::size_t i, bool value) {
        check_index(i);
        const std::uint64_t bit = std::uint64_t(1) << (i % 64);
        if (value)
            words_[i / 64] |= bit;
        else
            words_[i / 64] &= ~bit;
    }

    void flip(std::size_t i) { set(i, !get(i)); }

    std::size_t weight() const noexcept {
        std::size_t w = 0;
        for (auto word : words_) w += std::popcount(word);
        return w;
    }

    bool is_zero() const noexcept {
        for (auto word : words_) {
            if (word) return false;
        }
        return true;
    }

    BitVector& operator^=(const BitVector& other) {
        check_same_length(other);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    /// GF(2) inner product.
    bool dot(const BitVector& other) const {
        check_same_length(other);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
        return std::popcount(acc) & 1u;
    }

    /// result[(i+s) mod n] = (*this)[i]; s may be any integer.
    BitVector cyclic_shift(long s) const {
        const long n = static_cast<long>(n_);
        s = ((s % n) + n) % n;
        BitVector out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            if (get(i)) out.set((i + static_cast<std::size_t>(s)) % n_, true);
        return out;
    }

    /// Extended-code cyclic action: rotates coordinates 0..n-2, fixes n-1.
    BitVector cyclic_shift_fixing_last(long s) const {
        if (n_ < 2) return *this;
        const long m = static_cast<long>(n_) - 1;
        s = ((s % m) + m) % m;
        BitVector out(n_);
        for (std::size_t i = 0; i + 1 < n_; ++i)
            if (get(i)) out.set((i + static_cast<std::size_t>(s)) % static_cast<std::size_t>(m), true);
        out.set(n_ - 1, get(n_ - 1));
        return out;
    }

    std::uint64_t as_mask() const {
        if (n_ > 64) throw std::logic_error("BitVector::as_mask: length exceeds 64");
        return words_[0];
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }
    friend bool operator!=(const BitVector& a, const BitVector& b) { return !(a == b); }

    friend bool operator<(const BitVector& a, const BitVector& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        for (std::size_t w = 0; w < a.words_.size(); ++w) {
            const std::uint64_t diff = a.words_[w] ^ b.words_[w];
            if (diff) {
                const std::uint64_t low = diff & (~diff + 1);
                return (a.words_[w] & low) == 0;
            }
        }
        return false;
    }

   private:
    void check_index(std::size_t i) const {
        if (i >= n_) throw std::out_of_range("BitVector: index out of range");
    }
    void check_same_length(const BitVector& other) const {
        if (n_ != other.n_) throw std::invalid_argument("BitVector: length mismatch");
    }

    std::size_t n_;
    std::vector<std::uint64_t> words_;
};

/// Parses a word from octal text, most significant bit leftmost. The octal
/// digits expand to 3*digits bits; surplus leading bits must be zero and are
/// dropped so that exactly n bits remain, with the leading bit at coordinate 0.
inline BitVector bitvector_from_octal(std::string_view text, std::size_t n) {
    std::string bits;
    bits.reserve(text.size() * 3);
    for (char c : text) {
        if (c < '0' || c > '7') throw std::invalid_argument("bitvector_from_octal: invalid octal digit");
        const unsigned d = static_cast<unsigned>(c - '0');
        bits.push_back((d & 4u) ? '1' : '0');
        bits.push_back((d & 2u) ? '1' : '0');
        bits.push_back((d & 1u) ? '1' : '0');
    }
    if (bits.size() < n) throw std::invalid_argument("bitvector_from_octal: too few digits for length");
    const std::size_t drop = bits.size() - n;
    for (std::size_t i = 0; i < drop; ++i)
        if (bits[i] == '1') throw std::invalid_argument("bitvector_from_octal: nonzero bits beyond length");
    return BitVector::from_string(std::string_view(bits).substr(drop));
}

}  // namespace stopset

#endif
