#include <gtest/gtest.h>

#include "schurlab/completion.hpp"
#include "schurlab/random.hpp"
#include "schurlab/verify.hpp"
#include "test_helpers.hpp"

using namespace schurlab;
using schurlab::testing::ComplexNear;
using schurlab::testing::I;
using schurlab::testing::MatrixNear;

TEST(Completion, ChainOfTwoEntries) {
  PartialMatrix p(3);
  p.set(0, 1, 2.0);
  p.set(1, 2, 3.0);
  const auto r = complete_partial(p);
  ASSERT_EQ(r.status, CompletionStatus::completed);
  const auto& a = *r.matrix;
  EXPECT_TRUE(ComplexNear(a(0, 2), 6.0, 1e-14));
  EXPECT_TRUE(ComplexNear(a(2, 0), 1.0 / 6.0, 1e-15));
  const auto& f = *r.scaling;
  EXPECT_TRUE(ComplexNear(f[0], 1.0, 0.0));
  EXPECT_TRUE(ComplexNear(f[1], 0.5, 1e-15));
  EXPECT_TRUE(ComplexNear(f[2], 1.0 / 6.0, 1e-15));
  // All 27 triples satisfy the cocycle identity.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(std::abs(a(i, j) - a(i, k) * a(k, j)), 0.0, 1e-14);
}

TEST(Completion, DisconnectedIsUnderdetermined) {
  PartialMatrix p(3);
  p.set(0, 1, 2.0);
  const auto r = complete_partial(p);
  EXPECT_EQ(r.status, CompletionStatus::underdetermined);
  ASSERT_EQ(r.components.size(), 2u);
  EXPECT_EQ(r.components[0], (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(r.components[1], (std::vector<std::size_t>{3}));
  EXPECT_FALSE(r.matrix.has_value());
}

TEST(Completion, InconsistentTriangleReportsCycle) {
  PartialMatrix p(3);
  p.set(0, 1, 2.0);
  p.set(1, 2, 3.0);
  p.set(0, 2, 5.0);
  const auto r = complete_partial(p);
  ASSERT_EQ(r.status, CompletionStatus::inconsistent);
  ASSERT_EQ(r.violations.size(), 1u);
  const auto& v = r.violations[0];
  EXPECT_EQ(v.cycle.size(), 3u);
  EXPECT_TRUE(verify::cycle_contains_edge(v.cycle, v.row, v.col));
  // BFS keeps (1,2) and (1,3), so (2,3) is flagged: |3 - f2/f3| = |3 - 2.5|.
  EXPECT_EQ(v.row, 2u);
  EXPECT_EQ(v.col, 3u);
  EXPECT_NEAR(v.residual, 0.5, 1e-14);
}

TEST(Completion, TransposedEntriesMustBeReciprocal) {
  PartialMatrix p(2);
  p.set(0, 1, 2.0);
  p.set(1, 0, 0.5);
  EXPECT_EQ(complete_partial(p).status, CompletionStatus::completed);
  p.set(1, 0, 0.4);
  const auto r = complete_partial(p);
  EXPECT_EQ(r.status, CompletionStatus::inconsistent);
  EXPECT_EQ(r.violations[0].cycle.size(), 2u);
  EXPECT_TRUE(verify::cycle_contains_edge(r.violations[0].cycle, 1, 2));
}

TEST(Completion, DiagonalMustBeOne) {
  PartialMatrix p(2);
  p.set(0, 1, 2.0);
  p.set(1, 1, 3.0);
  const auto r = complete_partial(p);
  EXPECT_EQ(r.status, CompletionStatus::inconsistent);
  EXPECT_EQ(r.violations[0].row, 2u);
  EXPECT_EQ(r.violations[0].col, 2u);
}

TEST(Completion, InconsistencyTakesPrecedenceOverUnderdetermined) {
  PartialMatrix p(4);
  p.set(0, 1, 2.0);
  p.set(1, 0, 2.0);
  EXPECT_EQ(complete_partial(p).status, CompletionStatus::inconsistent);
}

TEST(Completion, ZeroEntryAndStarMode) {
  PartialMatrix p(2);
  p.set(0, 1, 0.0);
  EXPECT_THROW(complete_partial(p), ZeroEntryError);
  p.set(0, 1, 2.0);
  EXPECT_THROW(complete_partial(p, Tolerance{}, true), PreconditionError);
  p.set(0, 1, I);
  const auto r = complete_partial(p, Tolerance{}, true);
  ASSERT_EQ(r.status, CompletionStatus::completed);
  EXPECT_TRUE(ComplexNear((*r.matrix)(1, 0), -I, 1e-15));
}

TEST(Completion, RandomSpanningTreesRecoverTheMatrix) {
  for (std::uint64_t t = 0; t < 50; ++t) {
    auto rng = trial_stream(61, 0, t);
    const std::size_t n = uniform_index(rng, 1, 12);
    const auto a = build_from_scaling(verify::random_scaling(n, rng));
    const auto tree = verify::random_spanning_tree(n, rng);
    ASSERT_EQ(tree.size(), n - 1);
    const auto r = complete_partial(verify::mask_to_tree(a, tree, rng));
    ASSERT_EQ(r.status, CompletionStatus::completed);
    EXPECT_TRUE(MatrixNear(*r.matrix, a, 1e-9 * max_abs(a)));
  }
}

TEST(PartialMatrix, Bookkeeping) {
  PartialMatrix p(3);
  EXPECT_EQ(p.specified_count(), 0u);
  p.set(2, 1, 4.0);
  EXPECT_TRUE(p.is_specified(2, 1));
  EXPECT_EQ(p.specified_count(), 1u);
  p.clear(2, 1);
  EXPECT_FALSE(p.is_specified(2, 1));
  EXPECT_THROW(p.set(3, 0, 1.0), DimensionError);
}

TEST(LogCoordinates, ExampleMatrix) {
  const auto b = log_coordinates(schurlab::testing::example_2x2());
  EXPECT_TRUE(ComplexNear(b(0, 1), 0.25, 1e-15));
  EXPECT_TRUE(ComplexNear(b(1, 0), 0.75, 1e-15));
  EXPECT_TRUE(ComplexNear(b(0, 0), 0.0, 0.0));
}

TEST(LogCoordinates, AdditiveModOne) {
  for (std::uint64_t t = 0; t < 20; ++t) {
    auto rng = trial_stream(67, 0, t);
    const std::size_t n = uniform_index(rng, 2, 6);
    const auto b = log_coordinates(build_from_scaling(verify::random_scaling(n, rng)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Complex d = b(i, k) + b(k, j) - b(i, j);
          EXPECT_NEAR(std::abs(d.real() - std::round(d.real())), 0.0, 1e-12);
          EXPECT_NEAR(d.imag(), 0.0, 1e-12);
        }
  }
}
