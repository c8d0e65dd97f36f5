#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "schurlab/group_enumeration.hpp"
#include "schurlab/io.hpp"
#include "schurlab/random.hpp"
#include "schurlab/star_positive.hpp"
#include "test_helpers.hpp"

using namespace schurlab;
using schurlab::testing::ComplexNear;
using schurlab::testing::I;
using schurlab::testing::MatrixNear;

namespace {

// Every ±1 matrix with unit diagonal, symmetric, and a_ij = a_ik a_kj for all
// triples; found by scanning all 2^(n²) sign patterns.
std::set<std::string> brute_force_sign_matrices(std::size_t n) {
  std::set<std::string> out;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    ComplexMatrix a(n, n);
    for (std::size_t k = 0; k < n * n; ++k) a(k / n, k % n) = ((mask >> k) & 1U) ? -1.0 : 1.0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = a(i, i) == Complex{1.0};
      for (std::size_t j = 0; j < n && ok; ++j) {
        ok = a(i, j) == a(j, i);
        for (std::size_t k = 0; k < n && ok; ++k) ok = a(i, j) == a(i, k) * a(k, j);
      }
    }
    if (ok) out.insert(io::serialize(a));
  }
  return out;
}

std::set<std::string> enumerated(std::size_t n) {
  std::set<std::string> out;
  for (const auto& a : enumerate_real_positive(n)) out.insert(io::serialize(a));
  return out;
}

}  // namespace

TEST(IntegerPower, AgreesWithRepeatedMultiplication) {
  const Complex z{0.8, -0.7};
  Complex p{1.0};
  for (long long k = 0; k <= 40; ++k) {
    EXPECT_TRUE(ComplexNear(integer_power(z, k), p, 1e-12 * std::abs(p)));
    EXPECT_TRUE(ComplexNear(integer_power(z, -k), 1.0 / p, 1e-12 / std::abs(p)));
    p *= z;
  }
}

TEST(Toeplitz, SubgroupClosure) {
  const Complex l{0.6, 0.8}, m{2.0, -1.0};
  const auto prod = group_product(toeplitz_member(l, 5), toeplitz_member(m, 5));
  EXPECT_TRUE(MatrixNear(prod, toeplitz_member(l * m, 5), 1e-12));
  EXPECT_TRUE(check_cocycle(toeplitz_member(m, 6)).pass);
  // Inverse is λ⁻¹.
  EXPECT_TRUE(MatrixNear(schur_inverse(toeplitz_member(m, 4)), toeplitz_member(1.0 / m, 4), 1e-12));
}

TEST(GroupProduct, RejectsNonMembers) {
  EXPECT_THROW(group_product(ComplexMatrix{{1, 2}, {3, 1}}, all_ones(2)), NotMultiplicativeError);
  EXPECT_THROW(group_product(all_ones(2), ComplexMatrix{{1, 2}, {3, 1}}), NotMultiplicativeError);
}

TEST(Torus, FirstRowAndPositivity) {
  const std::vector<Complex> z{I, std::polar(1.0, 0.3), -1.0};
  const auto a = torus_param(z);
  EXPECT_TRUE(ComplexNear(a(0, 1), I, 1e-15));
  EXPECT_TRUE(ComplexNear(a(0, 3), -1.0, 1e-15));
  EXPECT_TRUE(is_positive_semidefinite(a));
  EXPECT_TRUE(certify_star_multiplicative(a).verdict);
}

TEST(Torus, HomomorphismFromTheTorus) {
  for (std::uint64_t t = 0; t < 20; ++t) {
    auto rng = trial_stream(59, 0, t);
    const std::size_t m = uniform_index(rng, 1, 6);
    std::vector<Complex> z(m), w(m), zw(m);
    for (std::size_t k = 0; k < m; ++k) {
      z[k] = unit_phase(rng);
      w[k] = unit_phase(rng);
      zw[k] = z[k] * w[k];
    }
    EXPECT_TRUE(MatrixNear(schur_product(torus_param(z), torus_param(w)), torus_param(zw), 1e-12));
  }
}

TEST(Torus, RejectsNonUnimodular) {
  const std::vector<Complex> z{2.0};
  EXPECT_THROW(torus_param(z), PreconditionError);
}

TEST(Enumerate, CountsArePowersOfTwo) {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::size_t count = 0;
    for_each_real_positive(n, [&](const SignMatrix&) { ++count; });
    EXPECT_EQ(count, std::size_t{1} << (n - 1));
  }
}

TEST(Enumerate, MatchesBruteForceForSmallN) {
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(enumerated(n), brute_force_sign_matrices(n)) << "n=" << n;
}

TEST(Enumerate, ThreeByThreeFrozen) {
  const std::set<std::string> want{
      io::serialize(ComplexMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}),
      io::serialize(ComplexMatrix{{1, -1, -1}, {-1, 1, 1}, {-1, 1, 1}}),
      io::serialize(ComplexMatrix{{1, -1, 1}, {-1, 1, -1}, {1, -1, 1}}),
      io::serialize(ComplexMatrix{{1, 1, -1}, {1, 1, -1}, {-1, -1, 1}}),
  };
  EXPECT_EQ(enumerated(3), want);
}

TEST(Enumerate, FirstIsAllOnesAndEachIsStarMultiplicative) {
  const auto all = enumerate_real_positive(5);
  EXPECT_EQ(all.front(), all_ones(5));
  for (const auto& a : all) EXPECT_TRUE(certify_star_multiplicative(a).verdict);
}

TEST(Enumerate, SizeLimits) {
  EXPECT_THROW(enumerate_real_positive(0), DimensionError);
  EXPECT_THROW(enumerate_real_positive(kMaxEnumerationSize + 1), ResourceLimitError);
}
