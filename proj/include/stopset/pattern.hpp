#ifndef STOPSET_PATTERN_HPP
#define STOPSET_PATTERN_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "stopset/bits.hpp"

namespace stopset {

/// A sorted set of coordinate indices inside an ambient length n. Represents
/// erasure patterns, stopping-set candidates, and generic index sets.
class ErasurePattern {
   public:
    explicit ErasurePattern(std::size_t n) : n_(n) {
        if (n == 0) throw std::invalid_argument("ErasurePattern: ambient length must be >= 1");
    }

    ErasurePattern(std::size_t n, std::vector<std::uint32_t> indices) : ErasurePattern(n) {
        std::sort(indices.begin(), indices.end());
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (indices[i] >= n) throw std::out_of_range("ErasurePattern: index out of range");
            if (i > 0 && indices[i] == indices[i - 1])
                throw std::invalid_argument("ErasurePattern: duplicate index");
        }
        idx_ = std::move(indices);
    }

    ErasurePattern(std::size_t n, std::initializer_list<std::uint32_t> indices)
        : ErasurePattern(n, std::vector<std::uint32_t>(indices)) {}

    static ErasurePattern from_mask(std::uint64_t mask, std::size_t n) {
        if (n > 64) throw std::invalid_argument("ErasurePattern::from_mask: n must be <= 64");
        ErasurePattern p(n);
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u) p.idx_.push_back(static_cast<std::uint32_t>(i));
        return p;
    }

    std::size_t ambient() const noexcept { return n_; }
    std::size_t size() const noexcept { return idx_.size(); }
    bool empty() const noexcept { return idx_.empty(); }
    const std::vector<std::uint32_t>& indices() const noexcept { return idx_; }

    bool contains(std::uint32_t i) const {
        return std::binary_search(idx_.begin(), idx_.end(), i);
    }

    std::uint64_t mask() const {
        if (n_ > 64) throw std::logic_error("ErasurePattern::mask: ambient length exceeds 64");
        std::uint64_t m = 0;
        for (auto i : idx_) m |= std::uint64_t(1) << i;
        return m;
    }

    BitVector indicator() const {
        BitVector v(n_);
        for (auto i : idx_) v.set(i, true);
        return v;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '{';
        for (std::size_t i = 0; i < idx_.size(); ++i) {
            if (i) os << ',';
            os << idx_[i];
        }
        os << '}';
        return os.str();
    }

    friend bool operator==(const ErasurePattern& a, const ErasurePattern& b) {
        return a.n_ == b.n_ && a.idx_ == b.idx_;
    }
    friend bool operator!=(const ErasurePattern& a, const ErasurePattern& b) { return !(a == b); }

   private:
    std::size_t n_;
    std::vector<std::uint32_t> idx_;
};

inline ErasurePattern support(const BitVector& v) {
    ErasurePattern p(v.size());
    std::vector<std::uint32_t> idx;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) idx.push_back(static_cast<std::uint32_t>(i));
    return ErasurePattern(v.size(), std::move(idx));
}

}  // namespace stopset

#endif
