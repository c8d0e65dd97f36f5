#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "schurlab/core_matrix.hpp"
#include "schurlab/random.hpp"
#include "test_helpers.hpp"

using namespace schurlab;
using schurlab::testing::ComplexNear;
using schurlab::testing::I;
using schurlab::testing::MatrixNear;
using schurlab::testing::example_2x2;

TEST(ComplexMatrix, RejectsBadShapesAndNonFiniteEntries) {
  EXPECT_THROW(ComplexMatrix(0, 3), DimensionError);
  EXPECT_THROW(ComplexMatrix::from_entries(2, 2, {1.0, 2.0, 3.0}), DimensionError);
  EXPECT_THROW(ComplexMatrix::from_entries(1, 2, {1.0, Complex{NAN, 0.0}}), PreconditionError);
  EXPECT_THROW((ComplexMatrix{{1.0, 2.0}, {3.0}}), DimensionError);
}

TEST(Tolerance, Validation) {
  EXPECT_THROW(Tolerance(0.0, 0.0), PreconditionError);
  EXPECT_THROW(Tolerance(-1.0, 1e-12), PreconditionError);
  EXPECT_THROW(Tolerance(INFINITY, 1e-12), PreconditionError);
  const Tolerance tol(1e-8, 1e-12);
  EXPECT_DOUBLE_EQ(tol.threshold(10.0), 1e-7);
  EXPECT_DOUBLE_EQ(tol.threshold(0.0), 1e-12);
}

TEST(SchurProduct, AllOnesIsTheIdentity) {
  auto rng = trial_stream(1, 0, 0);
  const auto b = gaussian_matrix(2, 2, rng);
  EXPECT_EQ(schur_product(all_ones(2), b), b);
}

TEST(SchurProduct, DisjointSupportsGiveZero) {
  EXPECT_EQ(schur_product(matrix_unit(2, 0, 0), matrix_unit(2, 0, 1)), ComplexMatrix(2, 2));
}

TEST(SchurProduct, ExampleMatrixMultipliesEntries) {
  const Complex a{1.5, -2}, b{0.25, 3}, c{-7, 0.5}, d{2, 2};
  const ComplexMatrix m{{a, b}, {c, d}};
  const ComplexMatrix want{{a, I * b}, {-I * c, d}};
  EXPECT_TRUE(MatrixNear(schur_product(example_2x2(), m), want, 0.0));
}

TEST(SchurProduct, ShapeMismatch) {
  EXPECT_THROW(schur_product(ComplexMatrix(2, 2), ComplexMatrix(2, 3)), DimensionError);
}

TEST(SchurProduct, CommutativeAndAssociative) {
  for (std::uint64_t t = 0; t < 50; ++t) {
    auto rng = trial_stream(7, 1, t);
    const std::size_t r = uniform_index(rng, 1, 6), c = uniform_index(rng, 1, 6);
    const auto a = gaussian_matrix(r, c, rng), b = gaussian_matrix(r, c, rng), d = gaussian_matrix(r, c, rng);
    EXPECT_TRUE(MatrixNear(schur_product(a, b), schur_product(b, a), 0.0));
    EXPECT_TRUE(MatrixNear(schur_product(schur_product(a, b), d), schur_product(a, schur_product(b, d)), 1e-14));
  }
}

TEST(SchurInverse, Examples) {
  EXPECT_EQ(schur_inverse(all_ones(3)), all_ones(3));
  const ComplexMatrix a{{1, 2}, {0.5, 1}};
  EXPECT_TRUE(MatrixNear(schur_inverse(a), ComplexMatrix{{1, 0.5}, {2, 1}}, 0.0));
}

TEST(SchurInverse, ZeroEntryReportsOneBasedPosition) {
  try {
    schur_inverse(ComplexMatrix{{1, 0}, {1, 1}});
    FAIL() << "expected ZeroEntryError";
  } catch (const ZeroEntryError& e) {
    EXPECT_EQ(e.row(), 1u);
    EXPECT_EQ(e.col(), 2u);
  }
}

TEST(SchurInverse, ProductWithInverseIsAllOnes) {
  for (std::uint64_t t = 0; t < 30; ++t) {
    auto rng = trial_stream(3, 2, t);
    const std::size_t n = uniform_index(rng, 1, 8);
    const auto a = gaussian_matrix(n, n, rng);
    EXPECT_TRUE(MatrixNear(schur_product(a, schur_inverse(a)), all_ones(n), 1e-13));
  }
}

TEST(Eigenvalues, AllOnesHasSpectrumNAndZeros) {
  const auto ev = eigenvalues(all_ones(4));
  ASSERT_EQ(ev.size(), 4u);
  EXPECT_TRUE(ComplexNear(ev[0], 4.0, 1e-12));
  for (std::size_t k = 1; k < 4; ++k) EXPECT_TRUE(ComplexNear(ev[k], 0.0, 1e-12));
}

TEST(Eigenvalues, Identity) {
  for (const auto& v : eigenvalues(identity(3))) EXPECT_TRUE(ComplexNear(v, 1.0, 1e-14));
}

TEST(Eigenvalues, ExampleMatrix) {
  const auto ev = eigenvalues(example_2x2());
  EXPECT_TRUE(ComplexNear(ev[0], 2.0, 1e-14));
  EXPECT_TRUE(ComplexNear(ev[1], 0.0, 1e-14));
}

TEST(Eigenvalues, NonSquareRejected) { EXPECT_THROW(eigenvalues(ComplexMatrix(2, 3)), DimensionError); }

TEST(Eigenvalues, HermitianInputGivesRealSpectrum) {
  for (std::uint64_t t = 0; t < 20; ++t) {
    auto rng = trial_stream(5, 3, t);
    const std::size_t n = uniform_index(rng, 1, 10);
    const auto g = gaussian_matrix(n, n, rng);
    for (const auto& v : eigenvalues(g + adjoint(g))) EXPECT_EQ(v.imag(), 0.0);
  }
}

// Sum of eigenvalues equals the trace; the spectral radius never exceeds
// the operator norm.
TEST(Eigenvalues, TraceAndSpectralRadiusOracles) {
  for (std::uint64_t t = 0; t < 60; ++t) {
    auto rng = trial_stream(11, 4, t);
    const std::size_t n = uniform_index(rng, 1, 16);
    const auto a = gaussian_matrix(n, n, rng);
    const auto ev = eigenvalues(a);
    ASSERT_EQ(ev.size(), n);
    const Complex sum = std::accumulate(ev.begin(), ev.end(), Complex{});
    const double norm = operator_norm(a);
    EXPECT_LE(std::abs(sum - trace(a)), static_cast<double>(n) * 1e-10 * norm);
    double radius = 0.0;
    for (const auto& v : ev) radius = std::max(radius, std::abs(v));
    EXPECT_LE(radius, norm * (1 + 1e-12));
  }
}

TEST(NumericalRank, Examples) {
  EXPECT_EQ(numerical_rank(ComplexMatrix(3, 3)), 0u);
  EXPECT_EQ(numerical_rank(all_ones(5)), 1u);
  EXPECT_EQ(numerical_rank(identity(4)), 4u);
}

TEST(NumericalRank, OuterProductOfScalingAndReciprocalIsRankOne) {
  for (std::uint64_t t = 0; t < 40; ++t) {
    auto rng = trial_stream(13, 5, t);
    const std::size_t n = uniform_index(rng, 1, 16);
    const auto f = gaussian_vector(n, rng);
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = f[i] / f[j];
    EXPECT_EQ(numerical_rank(a), 1u);
  }
}

TEST(OperatorNorm, Examples) {
  EXPECT_NEAR(operator_norm(all_ones(2)), 2.0, 1e-14);
  EXPECT_NEAR(operator_norm(ComplexMatrix{{1, 2}, {0.5, 1}}), 2.5, 1e-14);
  EXPECT_NEAR(operator_norm(identity(7)), 1.0, 1e-14);
}

TEST(SpectrumDistance, GreedyMatchingIgnoresOrder) {
  const std::vector<Complex> x{{1, 0}, {0, 1}, {-2, 0}};
  const std::vector<Complex> y{{-2, 0}, {1, 1e-9}, {0, 1}};
  EXPECT_NEAR(spectrum_distance(x, y), 1e-9, 1e-15);
  EXPECT_THROW(spectrum_distance(x, {{1, 0}}), DimensionError);
}

TEST(EigenvectorNear, PicksRequestedEigenvalue) {
  const ComplexMatrix a{{2, 1}, {0, -1}};
  const auto v = eigenvector_near(a, 2.0);
  const auto av = matvec(a, v);
  EXPECT_TRUE(ComplexNear(av[0], 2.0 * v[0], 1e-12));
  EXPECT_TRUE(ComplexNear(av[1], 2.0 * v[1], 1e-12));
  EXPECT_NEAR(vector_norm(v), 1.0, 1e-14);
}
