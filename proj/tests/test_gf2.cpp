#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "reference.hpp"
#include "stopset/code.hpp"
#include "stopset/matrix.hpp"

using namespace stopset;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1u);
    return m;
}

}  // namespace

TEST(BitVector, StringRoundTripAndWeight) {
    const BitVector v = BitVector::from_string("1011001");
    EXPECT_EQ(v.to_string(), "1011001");
    EXPECT_EQ(v.weight(), 4u);
    EXPECT_TRUE(v.get(0));
    EXPECT_FALSE(v.get(1));
    EXPECT_THROW(BitVector::from_string("10x"), std::invalid_argument);
}

TEST(BitVector, CyclicShiftMovesCoordinatesForward) {
    const BitVector v = BitVector::from_string("1100000");
    EXPECT_EQ(v.cyclic_shift(1).to_string(), "0110000");
    EXPECT_EQ(v.cyclic_shift(-1).to_string(), "1000001");
    EXPECT_EQ(v.cyclic_shift(7), v);
    // extended action fixes the last coordinate
    const BitVector w = BitVector::from_string("10000001");
    EXPECT_EQ(w.cyclic_shift_fixing_last(1).to_string(), "01000001");
}

TEST(BitVector, LexOrderTreatsCoordinateZeroAsMostSignificant) {
    EXPECT_LT(BitVector::from_string("011"), BitVector::from_string("100"));
    EXPECT_LT(BitVector::from_string("000"), BitVector::from_string("001"));
    EXPECT_FALSE(BitVector::from_string("100") < BitVector::from_string("011"));
}

TEST(BitVector, OctalParsing) {
    // 11 octal digits = 33 bits; two leading zero bits are dropped to get 31
    const BitVector v = bitvector_from_octal("14140500022", 31);
    EXPECT_EQ(v.size(), 31u);
    EXPECT_EQ(v.weight(), 8u);
    EXPECT_THROW(bitvector_from_octal("74140500022", 31), std::invalid_argument);  // nonzero dropped bits
    EXPECT_THROW(bitvector_from_octal("18", 6), std::invalid_argument);            // bad digit
}

TEST(Rank, IdentityZeroAndWolfmann) {
    EXPECT_EQ(rank(BitMatrix::identity(12)), 12u);
    EXPECT_EQ(rank(BitMatrix(3, 5)), 0u);
    EXPECT_EQ(rank(golay24_wolfmann()), 12u);
}

TEST(Rank, MatchesTransposeAndNaiveOnRandomMatrices) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        const BitMatrix m = random_matrix(rows, cols, rng);
        const std::size_t r = rank(m);
        EXPECT_EQ(r, rank(m.transpose()));
        EXPECT_EQ(r, ref::naive_rank(ref::to_int_matrix(m)));
    }
}

TEST(RowReduce, IdentityAndSingleRow) {
    const auto rr = row_reduce(BitMatrix::identity(5));
    EXPECT_EQ(rr.reduced, BitMatrix::identity(5));
    EXPECT_EQ(rr.pivots, (std::vector<std::size_t>{0, 1, 2, 3, 4}));

    const BitMatrix single(std::vector<BitVector>{BitVector::from_string("110")});
    const auto rr2 = row_reduce(single);
    EXPECT_EQ(rr2.reduced, single);
    EXPECT_EQ(rr2.pivots, (std::vector<std::size_t>{0}));
}

TEST(RowReduce, DuplicateRowsCollapsePerZeroRowFlag) {
    const BitMatrix two_equal(std::vector<BitVector>{BitVector::from_string("101"), BitVector::from_string("101")});
    const auto dropped = row_reduce(two_equal, ZeroRows::Drop);
    EXPECT_EQ(dropped.reduced.rows(), 1u);
    EXPECT_EQ(dropped.pivots, (std::vector<std::size_t>{0}));
    const auto kept = row_reduce(two_equal, ZeroRows::Keep);
    EXPECT_EQ(kept.reduced.rows(), 2u);
    EXPECT_TRUE(kept.reduced.row(1).is_zero());
}

TEST(RowReduce, PreservesRowSpace) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const BitMatrix m = random_matrix(2 + rng() % 6, 2 + rng() % 8, rng);
        const auto rr = row_reduce(m);
        for (std::size_t r = 0; r < m.rows(); ++r) EXPECT_TRUE(in_row_space(rr.reduced, m.row(r)));
        for (std::size_t r = 0; r < rr.reduced.rows(); ++r) EXPECT_TRUE(in_row_space(m, rr.reduced.row(r)));
    }
}

TEST(Restrict, IdentityRestrictionReturnsMatrix) {
    std::mt19937_64 rng(3);
    const BitMatrix m = random_matrix(4, 6, rng);
    std::vector<std::uint32_t> all{0, 1, 2, 3, 4, 5};
    EXPECT_EQ(restrict_columns(m, ErasurePattern(6, all)), m);
}

TEST(Restrict, SingleColumnAndBlockSelection) {
    const BitMatrix i3 = BitMatrix::identity(3);
    const BitMatrix col = restrict_columns(i3, ErasurePattern(3, {1}));
    EXPECT_EQ(col.rows(), 3u);
    EXPECT_EQ(col.cols(), 1u);
    EXPECT_FALSE(col.get(0, 0));
    EXPECT_TRUE(col.get(1, 0));
    EXPECT_FALSE(col.get(2, 0));

    std::vector<std::uint32_t> first12;
    for (std::uint32_t i = 0; i < 12; ++i) first12.push_back(i);
    EXPECT_EQ(restrict_columns(golay24_wolfmann(), ErasurePattern(24, first12)), BitMatrix::identity(12));

    EXPECT_THROW(ErasurePattern(3, {7}), std::out_of_range);
}

TEST(SolveErased, NoErasuresChecksMembership) {
    const LinearCode hamming = cyclic_code(7, kHamming7Generator);
    const BitVector codeword = hamming.encode(BitVector::from_string("1010"));
    const ErasurePattern none(7);
    const auto ok = solve_erased(hamming.parity(), codeword, none);
    EXPECT_EQ(ok.status, ErasureSolve::Status::Unique);
    EXPECT_EQ(ok.word, codeword);

    BitVector corrupted = codeword;
    corrupted.flip(0);
    EXPECT_EQ(solve_erased(hamming.parity(), corrupted, none).status, ErasureSolve::Status::NoSolution);
}

TEST(SolveErased, CodewordSupportIsNotUnique) {
    const LinearCode hamming = cyclic_code(7, kHamming7Generator);
    const BitVector word = hamming.generator().row(0);
    const auto res = solve_erased(hamming.parity(), BitVector(7), support(word));
    EXPECT_EQ(res.status, ErasureSolve::Status::NotUnique);
}

TEST(SolveErased, GolayRecoversUpToSevenErasures) {
    const BitMatrix h = golay24_wolfmann();
    const LinearCode g24 = LinearCode::from_parity(h);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        BitVector msg(12);
        for (std::size_t i = 0; i < 12; ++i) msg.set(i, rng() & 1u);
        const BitVector codeword = g24.encode(msg);
        const std::size_t count = 1 + rng() % 7;
        std::vector<std::uint32_t> idx(24);
        for (std::uint32_t i = 0; i < 24; ++i) idx[i] = i;
        for (std::size_t i = 0; i < count; ++i) std::swap(idx[i], idx[i + rng() % (24 - i)]);
        idx.resize(count);
        const ErasurePattern erased(24, idx);
        const auto res = solve_erased(h, codeword, erased);
        ASSERT_EQ(res.status, ErasureSolve::Status::Unique);
        EXPECT_EQ(res.word, codeword);
    }
}

// Uniqueness must coincide with independence of the erased columns; both are
// cross-checked against plain codeword enumeration on the [7,4] Hamming code.
TEST(SolveErased, UniquenessMatchesRankAndEnumeration) {
    const LinearCode hamming = cyclic_code(7, kHamming7Generator);
    const BitVector sent = hamming.encode(BitVector::from_string("0110"));
    const auto words = ref::span_words(ref::to_int_matrix(hamming.generator()), 7);

    for (std::uint64_t mask = 0; mask < (1u << 7); ++mask) {
        const ErasurePattern erased = ErasurePattern::from_mask(mask, 7);
        const auto res = solve_erased(hamming.parity(), sent, erased);

        std::size_t agreeing = 0;
        for (const auto& w : words) {
            bool match = true;
            for (std::size_t c = 0; c < 7; ++c)
                if (!((mask >> c) & 1u) && w[c] != (sent.get(c) ? 1 : 0)) match = false;
            if (match) ++agreeing;
        }
        ASSERT_GE(agreeing, 1u);

        const bool unique_by_rank =
            erased.empty() || rank(restrict_columns(hamming.parity(), erased)) == erased.size();
        EXPECT_EQ(res.status == ErasureSolve::Status::Unique, unique_by_rank);
        EXPECT_EQ(agreeing == 1, res.status == ErasureSolve::Status::Unique);
        if (res.status == ErasureSolve::Status::Unique) EXPECT_EQ(res.word, sent);
    }
}

TEST(MatrixIo, TextFormatRoundTrip) {
    std::mt19937_64 rng(5);
    const BitMatrix m = random_matrix(3, 9, rng);
    std::stringstream ss;
    write_matrix(ss, m);
    std::string header;
    std::getline(ss, header);
    EXPECT_EQ(header, "3 9");
    ss.seekg(0);
    EXPECT_EQ(read_matrix(ss), m);
}

TEST(MatrixIo, RejectsMalformedInput) {
    std::stringstream bad1("2 3\n101\n10\n");
    EXPECT_THROW(read_matrix(bad1), std::runtime_error);
    std::stringstream bad2("nonsense");
    EXPECT_THROW(read_matrix(bad2), std::runtime_error);
}
