#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "stopset/code.hpp"
#include "stopset/perm.hpp"

using namespace stopset;

namespace {

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::uint32_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = n; i > 1; --i) std::swap(img[i - 1], img[rng() % i]);
    return Permutation(std::move(img));
}

BitVector random_vec(std::size_t n, std::mt19937_64& rng) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1u);
    return v;
}

}  // namespace

TEST(ParseCycles, ThetaOfTheGolayAutomorphisms) {
    const Permutation theta = wolfmann_theta();
    EXPECT_EQ(theta(0), 12u);
    EXPECT_EQ(theta(12), 0u);
    EXPECT_EQ(theta(11), 23u);
    EXPECT_EQ(theta, theta.inverse());
}

TEST(ParseCycles, EmptyTextIsIdentity) {
    EXPECT_TRUE(Permutation::parse_cycles("", 24).is_identity());
    EXPECT_TRUE(Permutation::parse_cycles("()", 24).is_identity());
}

TEST(ParseCycles, PiFixesFirstThreePoints) {
    const Permutation pi = wolfmann_pi();
    EXPECT_EQ(pi(0), 0u);
    EXPECT_EQ(pi(1), 1u);
    EXPECT_EQ(pi(2), 2u);
    EXPECT_EQ(pi(3), 6u);
    EXPECT_EQ(pi(12), 3u);
    EXPECT_TRUE(pow(pi, 7).is_identity());
}

TEST(ParseCycles, RejectsRepeatsAndOutOfRange) {
    EXPECT_THROW(Permutation::parse_cycles("(0,1)(1,2)", 5), std::invalid_argument);
    EXPECT_THROW(Permutation::parse_cycles("(0,7)", 5), std::invalid_argument);
    EXPECT_THROW(Permutation::parse_cycles("(0,1", 5), std::invalid_argument);
}

TEST(ParseCycles, RoundTripsThroughCycleText) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        const Permutation p = random_perm(9, rng);
        EXPECT_EQ(Permutation::parse_cycles(p.to_cycles(), 9), p);
    }
}

TEST(Apply, IdentityAndCyclicShiftConvention) {
    const BitVector v = BitVector::from_string("1101000");
    EXPECT_EQ(apply(Permutation::identity(7), v), v);
    // gamma: i -> i+1, so gamma(c) = (c_{n-1}, c_0, ..., c_{n-2})
    const Permutation gamma = c1_group(7)[1];
    EXPECT_EQ(apply(gamma, v), v.cyclic_shift(1));
    EXPECT_EQ(apply(gamma, v).to_string(), "0110100");
}

TEST(Apply, PatternImageAndInverseRoundTrip) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        const Permutation p = random_perm(12, rng);
        const ErasurePattern e(12, {1, 5, 7});
        EXPECT_EQ(apply(p, apply(p.inverse(), e)), e);
        EXPECT_EQ(apply(p.inverse(), apply(p, e)), e);
    }
    EXPECT_THROW(apply(Permutation::identity(5), BitVector(6)), std::invalid_argument);
}

TEST(Apply, DistributesOverComposition) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; ++t) {
        const Permutation p = random_perm(10, rng), q = random_perm(10, rng);
        const BitVector v = random_vec(10, rng);
        EXPECT_EQ(apply(compose(p, q), v), apply(p, apply(q, v)));
        EXPECT_TRUE(compose(p, p.inverse()).is_identity());
    }
}

TEST(C1Group, SizesAndFixedPoints) {
    const PermSet plain = c1_group(23);
    EXPECT_EQ(plain.size(), 23u);
    EXPECT_TRUE(plain[0].is_identity());

    const PermSet ext = c1_group(24, true);
    EXPECT_EQ(ext.size(), 23u);
    for (const auto& p : ext) EXPECT_EQ(p(23), 23u);

    const PermSet tiny = c1_group(2);
    EXPECT_EQ(tiny.size(), 2u);
    EXPECT_EQ(tiny[1](0), 1u);
}

TEST(C2Group, CyclotomicCosetSizes) {
    EXPECT_EQ(c2_group(31).size(), 5u);  // {1,2,4,8,16}
    EXPECT_EQ(c2_group(7).size(), 3u);   // {1,2,4}
    EXPECT_EQ(c2_group(3).size(), 2u);   // {1,2}
    EXPECT_THROW(c2_group(8), std::invalid_argument);

    const PermSet z3 = c2_group(3);
    EXPECT_EQ(z3[0], Permutation::parse_cycles("(1,2)", 3));
    EXPECT_TRUE(z3[1].is_identity());  // zeta^m closes the set

    const PermSet ext = c2_group(24, true);
    EXPECT_EQ(ext.size(), 11u);  // order of 2 mod 23
    for (const auto& p : ext) EXPECT_EQ(p(23), 23u);
}

TEST(IsAutomorphism, IdentityThetaAndCounterexample) {
    const LinearCode g24w = LinearCode::from_parity(golay24_wolfmann());
    EXPECT_TRUE(is_automorphism(g24w, Permutation::identity(24)));
    EXPECT_TRUE(is_automorphism(g24w, wolfmann_theta()));
    EXPECT_TRUE(is_automorphism(g24w, wolfmann_pi()));
    EXPECT_FALSE(is_automorphism(g24w, Permutation::parse_cycles("(0,1)", 24)));
}

TEST(WolfmannSet, FourteenAutomorphismsIncludingIdentity) {
    const PermSet s = wolfmann_set();
    EXPECT_EQ(s.size(), 14u);
    EXPECT_TRUE(s[0].is_identity());
    const LinearCode g24w = LinearCode::from_parity(golay24_wolfmann());
    for (const auto& p : s) EXPECT_TRUE(is_automorphism(g24w, p));
}

TEST(Transitivity, CyclicAndSymmetricGenerators) {
    PermSet cyclic5(5);
    cyclic5.add(c1_group(5)[1]);
    EXPECT_TRUE(is_t_transitive(cyclic5, 1, 5));
    EXPECT_FALSE(is_t_transitive(cyclic5, 2, 5));

    PermSet sym5(5);
    sym5.add(c1_group(5)[1]);
    sym5.add(Permutation::parse_cycles("(0,1)", 5));
    EXPECT_TRUE(is_t_transitive(sym5, 2, 5));

    EXPECT_THROW(is_t_transitive(sym5, 3, 5), std::invalid_argument);
}

// Theorem-4.1 closure: C1 and C2 are automorphisms of every cyclic code we
// construct, in both the plain and the extended convention.
TEST(AutomorphismClosure, C1AndC2OnConstructedCodes) {
    const LinearCode hamming = cyclic_code(7, kHamming7Generator);
    const LinearCode golay = cyclic_code(23, kGolay23Generator);
    const LinearCode bch = cyclic_code(31, kBch31_16Generator);
    for (const auto* code : {&hamming, &golay, &bch}) {
        for (const auto& p : c1_group(code->n())) EXPECT_TRUE(is_automorphism(*code, p));
        for (const auto& p : c2_group(code->n())) EXPECT_TRUE(is_automorphism(*code, p));
    }
    const LinearCode g24 = extend(golay);
    for (const auto& p : c1_group(24, true)) EXPECT_TRUE(is_automorphism(g24, p));
    for (const auto& p : c2_group(24, true)) EXPECT_TRUE(is_automorphism(g24, p));
}

// Aut(C) = Aut(dual(C)), checked directly on a small code.
TEST(AutomorphismClosure, CodeAndDualAgree) {
    const LinearCode hamming = cyclic_code(7, kHamming7Generator);
    const LinearCode simplex = dual(hamming);
    std::mt19937_64 rng(23);
    std::vector<Permutation> probes;
    for (const auto& p : c1_group(7)) probes.push_back(p);
    for (int t = 0; t < 40; ++t) probes.push_back(random_perm(7, rng));
    for (const auto& p : probes) EXPECT_EQ(is_automorphism(hamming, p), is_automorphism(simplex, p));
}

TEST(PermSetBasics, RejectsDuplicatesAndMismatchedDegrees) {
    PermSet s(5);
    EXPECT_TRUE(s.add(Permutation::identity(5)));
    EXPECT_FALSE(s.add(Permutation::identity(5)));
    EXPECT_THROW(s.add(Permutation::identity(6)), std::invalid_argument);
}

TEST(PermIo, FileFormatRoundTrip) {
    const PermSet s = wolfmann_set();
    std::stringstream ss;
    write_perm_set(ss, s);
    std::string header;
    std::getline(ss, header);
    EXPECT_EQ(header, "degree 24");
    ss.seekg(0);
    const PermSet back = read_perm_set(ss);
    ASSERT_EQ(back.size(), s.size());
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(back[i], s[i]);
}
