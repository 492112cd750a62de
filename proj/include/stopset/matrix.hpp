#ifndef STOPSET_MATRIX_HPP
#define STOPSET_MATRIX_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "stopset/bits.hpp"
#include "stopset/pattern.hpp"

namespace stopset {

/// Dense GF(2) matrix as a list of equal-length bit-packed rows.
class BitMatrix {
   public:
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {
        if (cols == 0) throw std::invalid_argument("BitMatrix: column count must be >= 1");
    }

    explicit BitMatrix(std::vector<BitVector> rows) {
        if (rows.empty()) throw std::invalid_argument("BitMatrix: need at least one row");
        cols_ = rows.front().size();
        for (const auto& r : rows)
            if (r.size() != cols_) throw std::invalid_argument("BitMatrix: rows of unequal length");
        rows_ = std::move(rows);
    }

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.rows_[i].set(i, true);
        return m;
    }

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    const BitVector& row(std::size_t i) const { return rows_.at(i); }
    BitVector& row(std::size_t i) { return rows_.at(i); }
    const std::vector<BitVector>& row_list() const noexcept { return rows_; }

    bool get(std::size_t i, std::size_t j) const { return rows_.at(i).get(j); }
    void set(std::size_t i, std::size_t j, bool v) { rows_.at(i).set(j, v); }

    void append_row(const BitVector& r) {
        if (r.size() != cols_) throw std::invalid_argument("BitMatrix::append_row: length mismatch");
        rows_.push_back(r);
    }

    BitMatrix transpose() const {
        BitMatrix t(cols_, rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (rows_[i].get(j)) t.rows_[j].set(i, true);
        return t;
    }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const BitMatrix& a, const BitMatrix& b) { return !(a == b); }

   private:
    std::size_t cols_;
    std::vector<BitVector> rows_;
};

/// H * v^T over GF(2); one bit per row of H.
inline BitVector syndrome(const BitMatrix& h, const BitVector& v) {
    if (v.size() != h.cols()) throw std::invalid_argument("syndrome: length mismatch");
    BitVector s(h.rows());
    for (std::size_t r = 0; r < h.rows(); ++r)
        if (h.row(r).dot(v)) s.set(r, true);
    return s;
}

/// Columns of m indexed by the pattern, in index order. Zero rows are kept;
/// dropping them is the caller's decision.
inline BitMatrix restrict_columns(const BitMatrix& m, const ErasurePattern& pattern) {
    if (pattern.ambient() != m.cols())
        throw std::invalid_argument("restrict_columns: pattern ambient length must equal column count");
    if (pattern.empty()) throw std::invalid_argument("restrict_columns: empty column set");
    BitMatrix out(m.rows(), pattern.size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const BitVector& src = m.row(r);
        for (std::size_t j = 0; j < pattern.size(); ++j)
            if (src.get(pattern.indices()[j])) out.set(r, j, true);
    }
    return out;
}

enum class ZeroRows { Keep, Drop };

struct RowReduceResult {
    BitMatrix reduced;
    std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

/// Reduced row echelon form. Pivot selection: the lowest remaining row index
/// with a one in the current column, so results are deterministic.
inline RowReduceResult row_reduce(const BitMatrix& m, ZeroRows zero_rows = ZeroRows::Drop) {
    std::vector<BitVector> rows = m.row_list();
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col < m.cols() && next < rows.size(); ++col) {
        std::size_t pivot = next;
        while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[next], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next && rows[r].get(col)) rows[r] ^= rows[next];
        pivots.push_back(col);
        ++next;
    }
    if (zero_rows == ZeroRows::Drop) {
        rows.resize(next ? next : 1, BitVector(m.cols()));
        if (next == 0) rows.assign(1, BitVector(m.cols()));  // all-zero input keeps one zero row
    }
    return RowReduceResult{BitMatrix(std::move(rows)), std::move(pivots)};
}

inline std::size_t rank(const BitMatrix& m) { return row_reduce(m).pivots.size(); }

/// True iff v lies in the row space of m.
inline bool in_row_space(const BitMatrix& m, const BitVector& v) {
    BitMatrix aug = m;
    aug.append_row(v);
    return rank(aug) == rank(m);
}

/// Removes duplicate rows, keeping first occurrences in order.
inline BitMatrix dedupe_rows(const BitMatrix& m) {
    std::vector<BitVector> kept;
    for (const auto& r : m.row_list()) {
        bool seen = false;
        for (const auto& k : kept)
            if (k == r) {
                seen = true;
                break;
            }
        if (!seen) kept.push_back(r);
    }
    return BitMatrix(std::move(kept));
}

struct ErasureSolve {
    enum class Status { Unique, NotUnique, NoSolution };
    Status status;
    BitVector word;  // the unique completion when status == Unique
};

/// Solves H x^T = 0 for the erased coordinates, the rest of x being fixed by
/// `known` (its erased entries are ignored). Unique exactly when the erased
/// columns of H are linearly independent.
inline ErasureSolve solve_erased(const BitMatrix& h, const BitVector& known, const ErasurePattern& erased) {
    if (known.size() != h.cols() || erased.ambient() != h.cols())
        throw std::invalid_argument("solve_erased: length mismatch");

    BitVector fixed = known;
    for (auto i : erased.indices()) fixed.set(i, false);

    if (erased.empty()) {
        if (syndrome(h, fixed).is_zero()) return {ErasureSolve::Status::Unique, fixed};
        return {ErasureSolve::Status::NoSolution, fixed};
    }

    // Augmented system [H_E | s] with s the syndrome of the fixed part.
    const std::size_t e = erased.size();
    BitMatrix sys(h.rows(), e + 1);
    for (std::size_t r = 0; r < h.rows(); ++r) {
        const BitVector& src = h.row(r);
        for (std::size_t j = 0; j < e; ++j)
            if (src.get(erased.indices()[j])) sys.set(r, j, true);
        if (src.dot(fixed)) sys.set(r, e, true);
    }

    auto rr = row_reduce(sys, ZeroRows::Keep);
    std::size_t coeff_rank = 0;
    bool inconsistent = false;
    for (std::size_t p = 0; p < rr.pivots.size(); ++p) {
        if (rr.pivots[p] == e)
            inconsistent = true;  // pivot in the rhs column: 0 = 1
        else
            ++coeff_rank;
    }
    if (inconsistent) return {ErasureSolve::Status::NoSolution, fixed};
    if (coeff_rank < e) return {ErasureSolve::Status::NotUnique, fixed};

    BitVector word = fixed;
    for (std::size_t p = 0; p < rr.pivots.size(); ++p)
        word.set(erased.indices()[rr.pivots[p]], rr.reduced.get(p, e));
    return {ErasureSolve::Status::Unique, word};
}

// --- matrix text format: first line "rows cols", then one 0/1 line per row ---

inline void write_matrix(std::ostream& os, const BitMatrix& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) os << m.row(r).to_string() << '\n';
}

inline BitMatrix read_matrix(std::istream& is) {
    std::size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols)) throw std::runtime_error("read_matrix: bad header");
    std::vector<BitVector> rws;
    rws.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        std::string line;
        if (!(is >> line)) throw std::runtime_error("read_matrix: missing row");
        if (line.size() != cols) throw std::runtime_error("read_matrix: row length mismatch");
        rws.push_back(BitVector::from_string(line));
    }
    return BitMatrix(std::move(rws));
}

inline void save_matrix(const std::string& path, const BitMatrix& m) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("save_matrix: cannot open " + path);
    write_matrix(os, m);
}

inline BitMatrix load_matrix(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("load_matrix: cannot open " + path);
    return read_matrix(is);
}

}  // namespace stopset

#endif
