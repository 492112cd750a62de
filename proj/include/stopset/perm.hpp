#ifndef STOPSET_PERM_HPP
#define STOPSET_PERM_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stopset/bits.hpp"
#include "stopset/pattern.hpp"

namespace stopset {

/// Permutation of the coordinates {0..n-1}.
///
/// Action convention, applied consistently everywhere: coordinates move
/// forward under p, i.e. apply(p, v)[p(i)] = v[i], and a pattern maps to its
/// image set {p(i)}. Composition is function composition: compose(p, q)
/// applies q first, so apply(compose(p, q), v) == apply(p, apply(q, v)).
class Permutation {
   public:
    explicit Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
        if (img_.empty()) throw std::invalid_argument("Permutation: degree must be >= 1");
        std::vector<bool> seen(img_.size(), false);
        for (auto v : img_) {
            if (v >= img_.size() || seen[v]) throw std::invalid_argument("Permutation: images are not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(std::size_t n) {
        std::vector<std::uint32_t> img(n);
        std::iota(img.begin(), img.end(), 0u);
        return Permutation(std::move(img));
    }

    std::size_t degree() const noexcept { return img_.size(); }
    std::uint32_t operator()(std::uint32_t i) const { return img_.at(i); }
    const std::vector<std::uint32_t>& images() const noexcept { return img_; }

    bool is_identity() const {
        for (std::uint32_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<std::uint32_t> inv(img_.size());
        for (std::uint32_t i = 0; i < img_.size(); ++i) inv[img_[i]] = i;
        return Permutation(std::move(inv));
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

    /// Disjoint-cycle text, e.g. "(0,12)(1,13)"; "()" for the identity.
    std::string to_cycles() const {
        std::string out;
        std::vector<bool> done(img_.size(), false);
        for (std::uint32_t start = 0; start < img_.size(); ++start) {
            if (done[start] || img_[start] == start) continue;
            out += '(';
            std::uint32_t i = start;
            bool first = true;
            do {
                if (!first) out += ',';
                out += std::to_string(i);
                done[i] = true;
                i = img_[i];
                first = false;
            } while (i != start);
            out += ')';
        }
        return out.empty() ? "()" : out;
    }

    /// Parses cycle notation. Unlisted indices are fixed points; cycles must
    /// be disjoint; "(a,b,c)" sends a->b->c->a. Whitespace is ignored and
    /// entries may be separated by commas or spaces.
    static Permutation parse_cycles(std::string_view text, std::size_t n) {
        std::vector<std::uint32_t> img(n);
        std::iota(img.begin(), img.end(), 0u);
        std::vector<bool> used(n, false);
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        };
        skip_ws();
        while (pos < text.size()) {
            if (text[pos] != '(') throw std::invalid_argument("parse_cycles: expected '('");
            ++pos;
            std::vector<std::uint32_t> cycle;
            skip_ws();
            while (pos < text.size() && text[pos] != ')') {
                std::size_t end = pos;
                while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
                if (end == pos) throw std::invalid_argument("parse_cycles: expected index");
                const unsigned long value = std::stoul(std::string(text.substr(pos, end - pos)));
                if (value >= n) throw std::invalid_argument("parse_cycles: index out of range");
                if (used[value]) throw std::invalid_argument("parse_cycles: repeated index");
                used[value] = true;
                cycle.push_back(static_cast<std::uint32_t>(value));
                pos = end;
                skip_ws();
                if (pos < text.size() && (text[pos] == ',' || text[pos] == ' ')) {
                    ++pos;
                    skip_ws();
                }
            }
            if (pos == text.size()) throw std::invalid_argument("parse_cycles: unterminated cycle");
            ++pos;  // ')'
            for (std::size_t i = 0; i < cycle.size(); ++i) img[cycle[i]] = cycle[(i + 1) % cycle.size()];
            skip_ws();
        }
        return Permutation(std::move(img));
    }

   private:
    std::vector<std::uint32_t> img_;
};

/// compose(p, q)(i) = p(q(i)); q acts first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
    std::vector<std::uint32_t> img(p.degree());
    for (std::uint32_t i = 0; i < img.size(); ++i) img[i] = p(q(i));
    return Permutation(std::move(img));
}

inline Permutation pow(const Permutation& p, std::size_t e) {
    Permutation r = Permutation::identity(p.degree());
    for (std::size_t i = 0; i < e; ++i) r = compose(p, r);
    return r;
}

inline BitVector apply(const Permutation& p, const BitVector& v) {
    if (p.degree() != v.size()) throw std::invalid_argument("apply: degree mismatch");
    BitVector out(v.size());
    for (std::uint32_t i = 0; i < v.size(); ++i)
        if (v.get(i)) out.set(p(i), true);
    return out;
}

inline ErasurePattern apply(const Permutation& p, const ErasurePattern& e) {
    if (p.degree() != e.ambient()) throw std::invalid_argument("apply: degree mismatch");
    std::vector<std::uint32_t> img;
    img.reserve(e.size());
    for (auto i : e.indices()) img.push_back(p(i));
    return ErasurePattern(e.ambient(), std::move(img));
}

/// Ordered list of distinct permutations of one common degree.
class PermSet {
   public:
    explicit PermSet(std::size_t degree) : degree_(degree) {
        if (degree == 0) throw std::invalid_argument("PermSet: degree must be >= 1");
    }

    std::size_t degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return perms_.size(); }
    bool empty() const noexcept { return perms_.empty(); }
    const Permutation& operator[](std::size_t i) const { return perms_.at(i); }
    auto begin() const { return perms_.begin(); }
    auto end() const { return perms_.end(); }
    const std::vector<Permutation>& members() const noexcept { return perms_; }

    bool contains(const Permutation& p) const {
        return std::find(perms_.begin(), perms_.end(), p) != perms_.end();
    }

    /// Returns false (and leaves the set unchanged) on duplicates.
    bool add(Permutation p) {
        if (p.degree() != degree_) throw std::invalid_argument("PermSet::add: degree mismatch");
        if (contains(p)) return false;
        perms_.push_back(std::move(p));
        return true;
    }

   private:
    std::size_t degree_;
    std::vector<Permutation> perms_;
};

namespace detail {

inline Permutation cyclic_shift_perm(std::size_t n, std::size_t s, bool extended) {
    std::vector<std::uint32_t> img(n);
    if (extended) {
        const std::size_t m = n - 1;
        for (std::size_t i = 0; i < m; ++i) img[i] = static_cast<std::uint32_t>((i + s) % m);
        img[n - 1] = static_cast<std::uint32_t>(n - 1);
    } else {
        for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>((i + s) % n);
    }
    return Permutation(std::move(img));
}

}  // namespace detail

/// C1 of cyclic codes: the identity plus all nontrivial cyclic shifts. The
/// extended variant rotates coordinates 0..n-2 and fixes n-1.
inline PermSet c1_group(std::size_t n, bool extended = false) {
    if (n < 2) throw std::invalid_argument("c1_group: n must be >= 2");
    if (extended && n < 3) throw std::invalid_argument("c1_group: extended needs n >= 3");
    const std::size_t cycle_len = extended ? n - 1 : n;
    PermSet s(n);
    for (std::size_t k = 0; k < cycle_len; ++k) s.add(detail::cyclic_shift_perm(n, k, extended));
    return s;
}

/// C2 of cyclic codes: powers of the doubling map i -> 2i (mod n), up to the
/// order m of 2 mod n (the size of the cyclotomic coset containing one), so
/// the last element is the identity. The extended variant fixes n-1 and acts
/// on 0..n-2.
inline PermSet c2_group(std::size_t n, bool extended = false) {
    const std::size_t m_len = extended ? n - 1 : n;
    if (m_len < 2 || m_len % 2 == 0) throw std::invalid_argument("c2_group: acting length must be odd and >= 3");
    std::vector<std::uint32_t> img(n);
    for (std::size_t i = 0; i < m_len; ++i) img[i] = static_cast<std::uint32_t>((2 * i) % m_len);
    if (extended) img[n - 1] = static_cast<std::uint32_t>(n - 1);
    const Permutation zeta{std::move(img)};

    std::size_t m = 1;  // order of 2 mod m_len = cyclotomic coset size of 1
    for (std::size_t v = 2 % m_len; v != 1; v = (2 * v) % m_len) ++m;

    PermSet s(n);
    Permutation acc = zeta;
    for (std::size_t e = 1; e <= m; ++e) {
        s.add(acc);
        acc = compose(zeta, acc);
    }
    return s;
}

/// The 14 Golay-code automorphisms theta^i * pi^j (i = 0,1; j = 0..6) on 24
/// points, pi applied first. Includes the identity at i = j = 0.
inline Permutation wolfmann_theta() {
    return Permutation::parse_cycles(
        "(0,12)(1,13)(2,14)(3,15)(4,16)(5,17)(6,18)(7,19)(8,20)(9,21)(10,22)(11,23)", 24);
}

inline Permutation wolfmann_pi() {
    return Permutation::parse_cycles("(3,6,15,9,21,18,12)(4,7,16,10,22,19,13)(5,8,17,11,23,20,14)", 24);
}

inline PermSet wolfmann_set() {
    const Permutation theta = wolfmann_theta();
    const Permutation pi = wolfmann_pi();
    PermSet s(24);
    for (std::size_t i = 0; i <= 1; ++i)
        for (std::size_t j = 0; j <= 6; ++j) s.add(compose(pow(theta, i), pow(pi, j)));
    return s;
}

/// Whether the group generated by the given permutations acts transitively on
/// ordered t-tuples of distinct points. Only t <= 2 is supported; the orbit
/// walk is breadth-first from the base tuple (0, .., t-1).
inline bool is_t_transitive(const PermSet& generators, std::size_t t, std::size_t n) {
    if (t < 1 || t > 2) throw std::invalid_argument("is_t_transitive: only t in {1,2} supported");
    if (n < t) throw std::invalid_argument("is_t_transitive: degree smaller than t");
    if (generators.degree() != n) throw std::invalid_argument("is_t_transitive: degree mismatch");

    auto encode = [n](std::uint32_t a, std::uint32_t b) { return static_cast<std::size_t>(a) * n + b; };
    std::size_t target = n;
    for (std::size_t i = 1; i < t; ++i) target *= n - i;

    std::set<std::size_t> seen;
    std::deque<std::pair<std::uint32_t, std::uint32_t>> queue;
    const std::pair<std::uint32_t, std::uint32_t> base{0u, t == 2 ? 1u : 0u};
    seen.insert(encode(base.first, base.second));
    queue.push_back(base);
    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            const std::pair<std::uint32_t, std::uint32_t> next{g(a), t == 2 ? g(b) : g(a)};
            if (seen.insert(encode(next.first, next.second)).second) queue.push_back(next);
        }
    }
    return seen.size() == target;
}

// --- permutation file format: header "degree <n>", then one cycle line per permutation ---

inline void write_perm_set(std::ostream& os, const PermSet& s) {
    os << "degree " << s.degree() << '\n';
    for (const auto& p : s) os << p.to_cycles() << '\n';
}

inline PermSet read_perm_set(std::istream& is) {
    std::string keyword;
    std::size_t degree = 0;
    if (!(is >> keyword >> degree) || keyword != "degree")
        throw std::runtime_error("read_perm_set: expected 'degree <n>' header");
    PermSet s(degree);
    std::string line;
    std::getline(is, line);  // rest of header line
    while (std::getline(is, line)) {
        std::string trimmed;
        for (char c : line)
            if (c != '\r') trimmed += c;
        if (trimmed.find_first_not_of(" \t") == std::string::npos) continue;
        if (!s.add(Permutation::parse_cycles(trimmed, degree)))
            throw std::runtime_error("read_perm_set: duplicate permutation");
    }
    return s;
}

inline void save_perm_set(const std::string& path, const PermSet& s) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("save_perm_set: cannot open " + path);
    write_perm_set(os, s);
}

inline PermSet load_perm_set(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("load_perm_set: cannot open " + path);
    return read_perm_set(is);
}

}  // namespace stopset

#endif
