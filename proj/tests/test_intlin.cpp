#include <random>

#include <gtest/gtest.h>

#include "exostein/intlin.hpp"
#include "oracles.hpp"

namespace exostein {
namespace {

void expect_valid_smith(const IntMatrix& a, const SmithDecomposition<Integer>& snf) {
  const auto& d = snf.diagonal;
  ASSERT_EQ(d.rows(), a.rows());
  ASSERT_EQ(d.cols(), a.cols());
  EXPECT_TRUE((snf.left * a * snf.right - d).isZero());
  const Integer du = determinant(snf.left);
  const Integer dv = determinant(snf.right);
  EXPECT_TRUE(du == 1 || du == -1);
  EXPECT_TRUE(dv == 1 || dv == -1);
  for (Index i = 0; i < d.rows(); ++i)
    for (Index j = 0; j < d.cols(); ++j) {
      if (i != j) EXPECT_EQ(d(i, j), 0);
      if (i == j) EXPECT_GE(d(i, j), 0);
    }
  const auto factors = snf.invariant_factors();
  for (std::size_t i = 1; i < factors.size(); ++i) EXPECT_EQ(factors[i] % factors[i - 1], 0);
  // zeros only trail
  for (Index i = snf.rank(); i < std::min(d.rows(), d.cols()); ++i) EXPECT_EQ(d(i, i), 0);
}

TEST(SmithNormalForm, DiagonalTwoThree) {
  const IntMatrix a = make_matrix({{2, 0}, {0, 3}});
  const auto snf = smith_normal_form(a);
  expect_valid_smith(a, snf);
  EXPECT_EQ(snf.diagonal, make_matrix({{1, 0}, {0, 6}}));
}

TEST(SmithNormalForm, ColumnRelatorGivesCyclicTorsion) {
  const IntMatrix a = make_matrix({{0}, {5}});
  const auto snf = smith_normal_form(a);
  expect_valid_smith(a, snf);
  ASSERT_EQ(snf.invariant_factors().size(), 1u);
  EXPECT_EQ(snf.invariant_factors()[0], 5);
  const auto group = cokernel(a);
  EXPECT_EQ(group.free_rank, 1);
  EXPECT_EQ(group.torsion, std::vector<Integer>{5});
}

TEST(SmithNormalForm, Identity) {
  const IntMatrix a = IntMatrix::Identity(3, 3);
  const auto snf = smith_normal_form(a);
  expect_valid_smith(a, snf);
  EXPECT_EQ(snf.diagonal, a);
}

TEST(SmithNormalForm, EmptyAndZero) {
  const IntMatrix empty(0, 0);
  const auto snf = smith_normal_form(empty);
  EXPECT_EQ(snf.rank(), 0);
  EXPECT_TRUE(cokernel(empty).trivial());

  const IntMatrix zero = IntMatrix::Zero(2, 3);
  const auto z = smith_normal_form(zero);
  expect_valid_smith(zero, z);
  EXPECT_EQ(cokernel(zero).free_rank, 2);
}

TEST(SmithNormalForm, RandomMatricesSatisfyInvariants) {
  std::mt19937_64 rng(20131);
  std::uniform_int_distribution<Index> size(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, size(rng), size(rng), -20, 20);
    expect_valid_smith(a, smith_normal_form(a));
  }
}

TEST(SmithNormalForm, ProductOfFactorsMatchesDeterminant) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, 4, 4, -9, 9);
    Integer product = 1;
    const auto snf = smith_normal_form(a);
    for (Index i = 0; i < 4; ++i) product *= snf.diagonal(i, i);
    EXPECT_EQ(product, abs(oracle::permutation_determinant(a)));
  }
}

TEST(Determinant, PaperMatrices) {
  EXPECT_EQ(determinant(make_matrix({{0, 1}, {1, -2}})), -1);
  // p = 4: -2p^2 + p - 3 = -31
  EXPECT_EQ(determinant(make_matrix({{0, 1}, {1, -31}})), -1);
  EXPECT_EQ(determinant(IntMatrix(IntMatrix::Identity(5, 5))), 1);
  EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
}

TEST(Determinant, RejectsNonSquare) {
  EXPECT_THROW(determinant(IntMatrix(IntMatrix::Zero(2, 3))), std::invalid_argument);
}

TEST(Determinant, AgreesWithPermutationExpansion) {
  std::mt19937_64 rng(42);
  for (Index n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 150; ++trial) {
      const IntMatrix a = oracle::random_matrix(rng, n, n, -5, 5);
      EXPECT_EQ(determinant(a), oracle::permutation_determinant(a));
    }
}

TEST(Determinant, ExactBeyondMachineIntegers) {
  IntMatrix a = make_matrix({{1, 0}, {0, 1}});
  a(0, 0) = Integer("123456789012345678901234567890");
  a(1, 1) = Integer("987654321098765432109876543210");
  EXPECT_EQ(determinant(a), a(0, 0) * a(1, 1));
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature(make_matrix({{2, 0}, {0, 3}})), 2);
  // Hand diagonalization: pivot on e2 (-2), then e1 + e2/2 has square 1/2.
  EXPECT_EQ(signature(make_matrix({{0, 1}, {1, -2}})), 0);
  EXPECT_EQ(signature(make_matrix({{1, 0}, {0, -1}})), 0);
  EXPECT_EQ(signature(IntMatrix(0, 0)), 0);
}

TEST(Signature, HyperbolicPairWithoutDiagonalPivot) {
  const Inertia in = inertia(make_matrix({{0, 1}, {1, 0}}));
  EXPECT_EQ(in.positive, 1);
  EXPECT_EQ(in.negative, 1);
  EXPECT_EQ(in.zero, 0);
  const Inertia degenerate = inertia(make_matrix({{0, 0, 0}, {0, 0, 3}, {0, 3, 0}}));
  EXPECT_EQ(degenerate, (Inertia{1, 1, 1}));
}

TEST(Signature, RejectsNonSymmetric) {
  EXPECT_THROW(signature(make_matrix({{0, 1}, {2, 0}})), std::invalid_argument);
}

TEST(Signature, AgreesWithEigenvaluesOnNonsingularMatrices) {
  std::mt19937_64 rng(99);
  int checked = 0;
  while (checked < 200) {
    const IntMatrix a = oracle::random_symmetric(rng, 1 + checked % 5, -6, 6);
    if (oracle::permutation_determinant(a) == 0) continue;
    EXPECT_EQ(signature(a), oracle::eigen_signature(a, 0)) << a;
    ++checked;
  }
}

TEST(Signature, InvariantUnderUnimodularCongruence) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = 1 + trial % 5;
    const IntMatrix f = oracle::random_symmetric(rng, n, -4, 4);
    const IntMatrix b = oracle::random_unimodular(rng, n);
    const IntMatrix g = congruence_transform(f, b);
    EXPECT_TRUE(is_symmetric(g));
    EXPECT_EQ(inertia(g), inertia(f));
    EXPECT_EQ(determinant(g), determinant(f));
    bool f_even = true, g_even = true;
    for (Index i = 0; i < n; ++i) {
      f_even = f_even && f(i, i) % 2 == 0;
      g_even = g_even && g(i, i) % 2 == 0;
    }
    EXPECT_EQ(f_even, g_even);
  }
}

TEST(RationalSolve, Examples) {
  const RatVector x = rational_solve(make_matrix({{-3}}), make_vector({1}));
  EXPECT_EQ(to_string(x(0)), "-1/3");

  const IntVector b = make_vector({4, -7, 11});
  const RatVector y = rational_solve(IntMatrix(IntMatrix::Identity(3, 3)), b);
  EXPECT_EQ(y, b.cast<Rational>());

  const RatVector z = rational_solve(make_matrix({{0, 1}, {1, -2}}), make_vector({1, 0}));
  EXPECT_EQ(to_string(z(0)), "2");
  EXPECT_EQ(to_string(z(1)), "1");
}

TEST(RationalSolve, SingularIsDegenerate) {
  EXPECT_THROW(rational_solve(make_matrix({{1, 2}, {2, 4}}), make_vector({1, 1})),
               DegenerateFormError);
  try {
    rational_solve(make_matrix({{0}}), make_vector({1}));
    FAIL();
  } catch (const DegenerateFormError& e) {
    EXPECT_STREQ(e.what(), "degenerate linking form");
  }
}

TEST(RationalSolve, SubstitutesBack) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 1 + trial % 5;
    const IntMatrix a = oracle::random_matrix(rng, n, n, -7, 7);
    if (oracle::permutation_determinant(a) == 0) continue;
    const IntVector b = oracle::random_matrix(rng, n, 1, -10, 10).col(0);
    const RatVector x = rational_solve(a, b);
    EXPECT_EQ(RatVector(a.cast<Rational>() * x), b.cast<Rational>());
  }
}

TEST(CongruenceTransform, FamilyBasisChanges) {
  EXPECT_EQ(congruence_transform(make_matrix({{0, 1}, {1, -18}}), make_matrix({{1, 8}, {0, 1}})),
            make_matrix({{0, 1}, {1, -2}}));
  EXPECT_EQ(congruence_transform(make_matrix({{0, 1}, {1, -9}}), make_matrix({{1, 4}, {0, 1}})),
            make_matrix({{0, 1}, {1, -1}}));
  const IntMatrix f = make_matrix({{2, 1}, {1, 5}});
  EXPECT_EQ(congruence_transform(f, IntMatrix(IntMatrix::Identity(2, 2))), f);
}

TEST(CongruenceTransform, RejectsNonUnimodularBasis) {
  try {
    congruence_transform(make_matrix({{0, 1}, {1, 0}}), make_matrix({{2, 0}, {0, 1}}));
    FAIL();
  } catch (const BasisChangeError& e) {
    EXPECT_STREQ(e.what(), "not a lattice basis change");
  }
}

}  // namespace
}  // namespace exostein
