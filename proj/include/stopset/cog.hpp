#ifndef STOPSET_COG_HPP
#define STOPSET_COG_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "stopset/code.hpp"
#include "stopset/matrix.hpp"

namespace stopset {

/// Cyclic orbit generator: the lexicographically smallest member of one
/// cyclic-shift orbit of (minimum-weight dual) codewords, plus the orbit size.
struct Cog {
    BitVector representative;
    std::size_t orbit_size;
};

namespace detail {

inline BitVector orbit_shift(const BitVector& v, long s, bool extended) {
    return extended ? v.cyclic_shift_fixing_last(s) : v.cyclic_shift(s);
}

inline std::vector<BitVector> orbit_of(const BitVector& v, bool extended) {
    std::vector<BitVector> orbit{v};
    for (BitVector w = orbit_shift(v, 1, extended); w != v; w = orbit_shift(w, 1, extended))
        orbit.push_back(w);
    return orbit;
}

}  // namespace detail

/// Partitions the given words into cyclic-shift orbits (the extended action
/// rotates 0..n-2 and fixes n-1). One cog per orbit, cogs sorted by
/// representative; the input must be a union of full orbits.
inline std::vector<Cog> cogs(const std::vector<BitVector>& words, std::size_t n, bool extended = false) {
    std::vector<Cog> out;
    if (words.empty()) return out;
    std::vector<BitVector> sorted = words;
    for (const auto& w : sorted)
        if (w.size() != n) throw std::invalid_argument("cogs: word length mismatch");
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != words.size()) throw std::invalid_argument("cogs: duplicate input words");

    std::vector<bool> used(sorted.size(), false);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (used[i]) continue;
        auto orbit = detail::orbit_of(sorted[i], extended);
        BitVector rep = sorted[i];
        for (const auto& member : orbit) {
            auto it = std::lower_bound(sorted.begin(), sorted.end(), member);
            if (it == sorted.end() || *it != member)
                throw std::invalid_argument("cogs: input is not a union of full orbits");
            used[static_cast<std::size_t>(it - sorted.begin())] = true;
            if (member < rep) rep = member;
        }
        out.push_back(Cog{rep, orbit.size()});
    }
    std::sort(out.begin(), out.end(),
              [](const Cog& a, const Cog& b) { return a.representative < b.representative; });
    return out;
}

/// Full-rank matrix of rows drawn from target_rows distinct cogs: greedy in
/// cog order, taking from each cog the first cyclic shift of its
/// representative that raises the rank (lexicographically smallest
/// representatives alone are often aligned enough to be rank-deficient, so
/// shifts within the orbit are fair game).
inline BitMatrix cog_matrix(const std::vector<Cog>& cog_list, std::size_t target_rows, bool extended = false) {
    if (cog_list.size() < target_rows)
        throw std::invalid_argument("cog_matrix: fewer cogs than requested rows");
    std::vector<BitVector> chosen;
    for (const auto& c : cog_list) {
        if (chosen.size() == target_rows) break;
        for (const auto& member : detail::orbit_of(c.representative, extended)) {
            std::vector<BitVector> trial = chosen;
            trial.push_back(member);
            if (rank(BitMatrix(trial)) == trial.size()) {
                chosen = std::move(trial);
                break;
            }
        }
    }
    if (chosen.size() != target_rows)
        throw std::invalid_argument("cog_matrix: no full-rank selection exists among the cogs");
    return BitMatrix(std::move(chosen));
}

/// All cyclic shifts of every cog representative, duplicates removed, in
/// (cog order, shift order). This is the redundant H_AGD_A-style matrix.
inline BitMatrix orbit_matrix(const std::vector<Cog>& cog_list, std::size_t n, bool extended = false) {
    if (cog_list.empty()) throw std::invalid_argument("orbit_matrix: empty cog list");
    std::vector<BitVector> rows;
    for (const auto& c : cog_list) {
        if (c.representative.size() != n) throw std::invalid_argument("orbit_matrix: length mismatch");
        for (const auto& member : detail::orbit_of(c.representative, extended)) rows.push_back(member);
    }
    return dedupe_rows(BitMatrix(std::move(rows)));
}

/// m cyclic shifts of a generator word; row i is g shifted by offsets[i]
/// (default offsets 0..m-1).
inline BitMatrix cyclic_shift_matrix(const BitVector& g, std::size_t m,
                                     const std::vector<std::uint32_t>* offsets = nullptr) {
    const std::size_t n = g.size();
    if (m < 1 || m > n) throw std::invalid_argument("cyclic_shift_matrix: need 1 <= m <= n");
    std::vector<std::uint32_t> offs;
    if (offsets) {
        offs = *offsets;
        if (offs.size() != m) throw std::invalid_argument("cyclic_shift_matrix: offset count != m");
        auto sorted = offs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("cyclic_shift_matrix: duplicate offsets");
    } else {
        offs.resize(m);
        for (std::size_t i = 0; i < m; ++i) offs[i] = static_cast<std::uint32_t>(i);
    }
    std::vector<BitVector> rows;
    rows.reserve(m);
    for (auto s : offs) rows.push_back(g.cyclic_shift(static_cast<long>(s % n)));
    return BitMatrix(std::move(rows));
}

/// Parse-and-check report for an externally supplied cog word (such as the
/// octal BCH cog); callers decide whether to use it or fall back to computed
/// cogs.
struct CogValidation {
    BitVector word;
    std::size_t weight;
    bool dual_member;
    std::size_t dual_minimum_weight;
};

inline CogValidation validate_cog_word(const LinearCode& code, const BitVector& word) {
    if (word.size() != code.n()) throw std::invalid_argument("validate_cog_word: length mismatch");
    bool member = true;
    for (std::size_t i = 0; i < code.generator().rows(); ++i)
        if (code.generator().row(i).dot(word)) {
            member = false;
            break;
        }
    return CogValidation{word, word.weight(), member, dual(code).minimum_distance()};
}

/// Cog list file pair: the representatives as a matrix file, plus a sidecar
/// "<path>.orbits" holding one orbit size per row.
inline void save_cogs(const std::string& path, const std::vector<Cog>& cog_list) {
    std::vector<BitVector> rows;
    rows.reserve(cog_list.size());
    for (const auto& c : cog_list) rows.push_back(c.representative);
    save_matrix(path, BitMatrix(std::move(rows)));
    std::ofstream os(path + ".orbits");
    if (!os) throw std::runtime_error("save_cogs: cannot open " + path + ".orbits");
    for (const auto& c : cog_list) os << c.orbit_size << '\n';
}

inline std::vector<Cog> load_cogs(const std::string& path) {
    BitMatrix m = load_matrix(path);
    std::ifstream os(path + ".orbits");
    if (!os) throw std::runtime_error("load_cogs: cannot open " + path + ".orbits");
    std::vector<Cog> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::size_t sz = 0;
        if (!(os >> sz)) throw std::runtime_error("load_cogs: missing orbit size");
        out.push_back(Cog{m.row(i), sz});
    }
    return out;
}

}  // namespace stopset

#endif
