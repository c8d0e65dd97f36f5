#include <gtest/gtest.h>

#include "schurlab/extreme_points.hpp"
#include "schurlab/group_enumeration.hpp"
#include "schurlab/random.hpp"
#include "schurlab/verify.hpp"
#include "test_helpers.hpp"

using namespace schurlab;
using schurlab::testing::example_2x2;

TEST(Correlation, ExampleIsRankOneExtreme) {
  const auto v = correlation_check(example_2x2());
  EXPECT_TRUE(v.is_correlation);
  EXPECT_EQ(v.rank, 1u);
  EXPECT_TRUE(v.rank_one_extreme);
}

TEST(Correlation, IdentityIsNotRankOne) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto v = correlation_check(identity(n));
    EXPECT_TRUE(v.is_correlation);
    EXPECT_EQ(v.rank, n);
    EXPECT_FALSE(v.rank_one_extreme);
  }
}

TEST(Correlation, NonPositiveOrNonUnitDiagonal) {
  EXPECT_FALSE(correlation_check(ComplexMatrix{{1, 2}, {2, 1}}).is_correlation);
  EXPECT_FALSE(correlation_check(ComplexMatrix{{2, 0}, {0, 1}}).is_correlation);
}

TEST(Correlation, EnumeratedSignMatricesAreExtreme) {
  for (const auto& a : enumerate_real_positive(4)) EXPECT_TRUE(correlation_check(a).rank_one_extreme);
}

TEST(Isometry, UpperTriangularOnesIsNeither) {
  const ComplexMatrix a{{1, 1}, {0, 1}};
  // A*A = [[1,1],[1,2]] by hand.
  EXPECT_TRUE(schurlab::testing::MatrixNear(adjoint(a) * a, ComplexMatrix{{1, 1}, {1, 2}}, 0.0));
  const auto v = isometry_check(a);
  EXPECT_FALSE(v.isometry);
  EXPECT_FALSE(v.coisometry);
  EXPECT_FALSE(v.scalar_multiple.has_value());
}

TEST(Isometry, UnitaryAndScaledUnitary) {
  auto rng = trial_stream(79, 0, 0);
  const auto u = verify::random_unitary(5, rng);
  const auto v = isometry_check(u);
  EXPECT_TRUE(v.isometry);
  EXPECT_TRUE(v.coisometry);
  const auto s = isometry_check(Complex{3.0} * u);
  EXPECT_FALSE(s.isometry);
  ASSERT_TRUE(s.scalar_multiple.has_value());
  EXPECT_NEAR(*s.scalar_multiple, 3.0, 1e-12);
}

TEST(Isometry, TallOrthonormalColumns) {
  const ComplexMatrix a{{1, 0}, {0, 1}, {0, 0}};
  const auto v = isometry_check(a);
  EXPECT_TRUE(v.isometry);
  EXPECT_FALSE(v.coisometry);
}

TEST(Isometry, ExampleOverRootTwoIsNotAnIsometry) {
  // Rank one, so A*A is never scalar for n ≥ 2.
  EXPECT_FALSE(isometry_check(example_2x2()).scalar_multiple.has_value());
}
