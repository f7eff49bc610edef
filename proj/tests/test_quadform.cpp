#include <random>

#include <gtest/gtest.h>

#include "exostein/quadform.hpp"
#include "oracles.hpp"

namespace exostein {
namespace {

// Form of X_p in the basis (T_p, R_p).
QuadraticForm family_form(long p) { return QuadraticForm(make_matrix({{0, 1}, {1, -2 * p * p + p - 3}})); }

TEST(QuadraticForm, RejectsNonSymmetricAndBadLabels) {
  EXPECT_THROW(QuadraticForm(make_matrix({{0, 1}, {0, 0}})), std::invalid_argument);
  EXPECT_THROW(QuadraticForm(make_matrix({{1}}), {"a", "b"}), std::invalid_argument);
  EXPECT_NO_THROW(QuadraticForm(make_matrix({{1}}), {"a"}));
}

TEST(Parity, Examples) {
  EXPECT_EQ(parity(QuadraticForm(make_matrix({{0, 1}, {1, -2}}))), Parity::even);
  EXPECT_EQ(parity(QuadraticForm(make_matrix({{0, 1}, {1, -9}}))), Parity::odd);
  EXPECT_EQ(parity(QuadraticForm(make_matrix({{1}}))), Parity::odd);
}

TEST(Parity, FamilyEvenExactlyForOddP) {
  for (long p = 1; p <= 100; ++p)
    EXPECT_EQ(parity(family_form(p)) == Parity::even, p % 2 == 1) << p;
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(QuadraticForm(make_matrix({{0, 1}, {1, -2}}))),
            (FormClass{2, 0, Parity::even, Definiteness::indefinite, true}));
  EXPECT_EQ(classify(family_form(2)),
            (FormClass{2, 0, Parity::odd, Definiteness::indefinite, true}));
  const auto zero = classify(QuadraticForm(make_matrix({{0, 0}, {0, 0}})));
  EXPECT_EQ(zero.definiteness, Definiteness::degenerate);
  EXPECT_EQ(zero.signature, 0);
  EXPECT_FALSE(zero.unimodular);
}

TEST(Classify, DefiniteForms) {
  const auto e8ish = classify(QuadraticForm(make_matrix({{2, -1}, {-1, 2}})));
  EXPECT_EQ(e8ish.definiteness, Definiteness::positive);
  EXPECT_EQ(e8ish.signature, 2);
  const auto neg = classify(QuadraticForm(make_matrix({{-1, 0}, {0, -1}})));
  EXPECT_EQ(neg.definiteness, Definiteness::negative);
  EXPECT_TRUE(neg.unimodular);
}

TEST(Classify, FamilyUnimodularSignatureZero) {
  for (long p = 1; p <= 100; ++p) {
    const auto c = classify(family_form(p));
    EXPECT_TRUE(c.unimodular);
    EXPECT_EQ(c.signature, 0);
    EXPECT_EQ(c.definiteness, Definiteness::indefinite);
    EXPECT_LE(std::abs(c.signature), c.rank);
  }
}

TEST(IsIsomorphic, Examples) {
  const QuadraticForm f1 = family_form(1);
  const QuadraticForm f2 = family_form(2);
  const QuadraticForm f3 = family_form(3);
  EXPECT_EQ(f1.gram(), make_matrix({{0, 1}, {1, -4}}));
  EXPECT_EQ(f3.gram(), make_matrix({{0, 1}, {1, -18}}));
  EXPECT_EQ(is_isomorphic(f1, f3), Isomorphism::yes);
  EXPECT_EQ(is_isomorphic(f1, f2), Isomorphism::no);
  EXPECT_EQ(is_isomorphic(f2, f2), Isomorphism::yes);
}

TEST(IsIsomorphic, FamilyFollowsParity) {
  for (long p = 1; p <= 30; ++p)
    for (long q = 1; q <= 30; ++q)
      EXPECT_EQ(is_isomorphic(family_form(p), family_form(q)) == Isomorphism::yes,
                p % 2 == q % 2);
}

TEST(IsIsomorphic, DefiniteRankTwoBySearch) {
  // Same lattice, different reduced bases.
  const QuadraticForm a(make_matrix({{2, 1}, {1, 2}}));
  const QuadraticForm b(make_matrix({{2, -1}, {-1, 2}}));
  EXPECT_EQ(is_isomorphic(a, b), Isomorphism::yes);
  const QuadraticForm c(make_matrix({{2, 3}, {3, 6}}));  // det 3, reduces to [[2,1],[1,2]]
  EXPECT_EQ(is_isomorphic(a, c), Isomorphism::yes);
  EXPECT_EQ(is_isomorphic(a, c, 0), Isomorphism::undecided);
}

TEST(IsIsomorphic, InvariantsSeparate) {
  EXPECT_EQ(is_isomorphic(QuadraticForm(make_matrix({{1}})), QuadraticForm(make_matrix({{-1}}))),
            Isomorphism::no);
  // Same det and signature, different discriminant groups: Z/4 vs Z/2+Z/2.
  const QuadraticForm a(make_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 4}}));
  const QuadraticForm b(make_matrix({{1, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
  EXPECT_EQ(is_isomorphic(a, b), Isomorphism::no);
}

TEST(IsIsomorphic, HigherRankDefiniteIsUndecided) {
  const QuadraticForm a(make_matrix({{2, 1, 0}, {1, 2, 0}, {0, 0, 3}}));
  const QuadraticForm b(make_matrix({{3, 0, 0}, {0, 2, 1}, {0, 1, 2}}));
  EXPECT_EQ(is_isomorphic(a, b), Isomorphism::undecided);
}

TEST(IsIsomorphic, UnimodularIndefiniteHigherRank) {
  // H + <-1> vs <1> + <-1> + <-1>: both odd, signature -1, rank 3.
  const QuadraticForm a(make_matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}));
  const QuadraticForm b(make_matrix({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
  EXPECT_EQ(is_isomorphic(a, b), Isomorphism::yes);
}

TEST(Pairing, Examples) {
  const QuadraticForm f1 = family_form(1);
  EXPECT_EQ(pairing(f1, make_vector({1, 1}), make_vector({1, 1})), -2);
  EXPECT_EQ(pairing(f1, make_vector({0, 0}), make_vector({0, 0})), 0);
  EXPECT_EQ(pairing(QuadraticForm(make_matrix({{0, 1}, {1, -2}})), make_vector({1, 0}),
                    make_vector({0, 1})),
            1);
  EXPECT_THROW(pairing(f1, make_vector({1}), make_vector({1, 1})), std::invalid_argument);
}

TEST(SolveSquare, Examples) {
  const auto s1 = solve_square(family_form(1), -2);
  EXPECT_TRUE(s1.complete);
  EXPECT_EQ(s1.vectors, (std::vector<IntVector>{make_vector({-1, -1}), make_vector({1, 1})}));

  const auto s2 = solve_square(family_form(2), -1);
  EXPECT_TRUE(s2.complete);
  EXPECT_EQ(s2.vectors, (std::vector<IntVector>{make_vector({-4, -1}), make_vector({4, 1})}));

  const auto none = solve_square(QuadraticForm(make_matrix({{0, 1}, {1, 0}})), 1);
  EXPECT_TRUE(none.complete);
  EXPECT_TRUE(none.vectors.empty());
}

TEST(SolveSquare, EnumerationOracleAgreesOnFamilyExamples) {
  EXPECT_EQ(solve_square(family_form(1), -2).vectors,
            oracle::enumerate_square(family_form(1).gram(), -2, 50));
  EXPECT_EQ(solve_square(family_form(2), -1).vectors,
            oracle::enumerate_square(family_form(2).gram(), -1, 50));
}

TEST(SolveSquare, NormalizedBasisGivesOnlyPlusMinusSecondVector) {
  const std::vector<IntVector> expected{make_vector({0, -1}), make_vector({0, 1})};
  for (long p = 1; p <= 30; ++p) {
    const long d = p % 2 ? -2 : -1;
    const auto s = solve_square(QuadraticForm(make_matrix({{0, 1}, {1, d}})), d);
    EXPECT_TRUE(s.complete);
    EXPECT_EQ(s.vectors, expected);
  }
}

TEST(SolveSquare, IsotropicSecondVector) {
  const QuadraticForm f(make_matrix({{-3, 1}, {1, 0}}));
  const auto s = solve_square(f, -3);
  EXPECT_TRUE(s.complete);
  EXPECT_EQ(s.vectors, oracle::enumerate_square(f.gram(), -3, 60));
}

TEST(SolveSquare, ZeroTargetFallsBackToBox) {
  const auto s = solve_square(QuadraticForm(make_matrix({{0, 1}, {1, 0}})), 0, 3);
  EXPECT_FALSE(s.complete);
  EXPECT_EQ(s.bound, 3);
  EXPECT_EQ(s.vectors.size(), 13u);  // (a,0) and (0,b), |a|,|b| <= 3
}

TEST(SolveSquare, ExactModeMatchesBruteForce) {
  // Every isotropic-basis form with small entries, every |c| <= 10.
  for (long e : {1, -1, 2, 3})
    for (long d = -6; d <= 6; ++d) {
      const QuadraticForm f(make_matrix({{0, e}, {e, d}}));
      for (long c = -10; c <= 10; ++c) {
        if (c == 0) continue;
        const auto s = solve_square(f, c);
        ASSERT_TRUE(s.complete);
        EXPECT_EQ(s.vectors, oracle::enumerate_square(f.gram(), c, 100))
            << "e=" << e << " d=" << d << " c=" << c;
      }
    }
}

TEST(SolveSquare, BoundedModeMatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix g = oracle::random_symmetric(rng, 2, -5, 5);
    if (g(0, 0) == 0) g(0, 0) = 1;
    if (g(1, 1) == 0) g(1, 1) = -1;
    const auto s = solve_square(QuadraticForm(g), 3, 20);
    EXPECT_FALSE(s.complete);
    EXPECT_EQ(s.vectors, oracle::enumerate_square(g, 3, 20));
  }
}

TEST(SolveSquare, RequiresRankTwo) {
  EXPECT_THROW(solve_square(QuadraticForm(make_matrix({{1}})), 1), std::invalid_argument);
}

}  // namespace
}  // namespace exostein
