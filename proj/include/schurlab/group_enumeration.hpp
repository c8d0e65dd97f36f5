// The group L^n of multiplicative coefficient matrices under the Schur
// product, its Toeplitz subgroup G^n = {λ^{j-i}}, the torus parametrization of
// the positive part, and enumeration of the real positive part.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "schurlab/core_matrix.hpp"
#include "schurlab/multiplicative.hpp"

namespace schurlab {

/// λ^k by repeated squaring; exact for λ in {±1, ±i}.
inline Complex integer_power(Complex lambda, long long k) {
  if (k < 0) {
    lambda = 1.0 / lambda;
    k = -k;
  }
  Complex result{1.0, 0.0};
  while (k > 0) {
    if (k & 1) result *= lambda;
    lambda *= lambda;
    k >>= 1;
  }
  return result;
}

/// a_ij = λ^{j-i}; constant along diagonals.
inline ComplexMatrix toeplitz_member(Complex lambda, std::size_t n) {
  if (std::abs(lambda) == 0.0) throw ZeroEntryError(1, 1, "toeplitz_member: lambda is zero");
  std::vector<Complex> powers(2 * n - 1);  // powers[d + n - 1] = λ^d
  for (std::size_t k = 0; k < powers.size(); ++k)
    powers[k] = integer_power(lambda, static_cast<long long>(k) - static_cast<long long>(n - 1));
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = powers[j + n - 1 - i];
  return a;
}

/// Group operation of L^n: the Schur product of two multiplicative matrices.
inline ComplexMatrix group_product(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol = Tolerance{}) {
  require_same_shape(a, b, "group_product");
  if (!check_cocycle(a, tol).pass) throw NotMultiplicativeError("group_product: left operand is not multiplicative");
  if (!check_cocycle(b, tol).pass) throw NotMultiplicativeError("group_product: right operand is not multiplicative");
  return schur_product(a, b);
}

/// The positive multiplicative matrix with first row (1, z_1, ..., z_{n-1}):
/// a_ij = conj(r_i) r_j with r = (1, z).
inline ComplexMatrix torus_param(std::span<const Complex> z, const Tolerance& tol = Tolerance{}) {
  for (std::size_t k = 0; k < z.size(); ++k)
    if (std::abs(std::abs(z[k]) - 1.0) > tol.threshold(1.0))
      throw PreconditionError("torus_param: z_" + std::to_string(k + 1) + " is not unimodular");
  const std::size_t n = z.size() + 1;
  std::vector<Complex> r(n);
  r[0] = 1.0;
  for (std::size_t k = 0; k < z.size(); ++k) r[k + 1] = z[k];
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j) ? Complex{1.0, 0.0} : std::conj(r[i]) * r[j];
  return a;
}

inline constexpr std::size_t kMaxEnumerationSize = 24;

/// A member of the real positive part, determined by the signs of the first
/// row: a_ij = s_i s_j with s_1 = +1.
struct SignMatrix {
  std::size_t n = 1;
  std::vector<int> first_row_signs;  // n - 1 values in {+1, -1}

  ComplexMatrix to_matrix() const {
    std::vector<double> s(n, 1.0);
    for (std::size_t k = 0; k + 1 < n; ++k) s[k + 1] = first_row_signs[k];
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = s[i] * s[j];
    return a;
  }
};

/// The `index`-th sign matrix in binary-counter order: bit k of `index` set
/// means first_row_signs[k] = -1.
inline SignMatrix sign_matrix_at(std::size_t n, std::uint64_t index) {
  SignMatrix m;
  m.n = n;
  m.first_row_signs.resize(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) m.first_row_signs[k] = ((index >> k) & 1U) ? -1 : 1;
  return m;
}

inline void check_enumeration_size(std::size_t n) {
  if (n == 0) throw DimensionError("enumeration size must be positive");
  if (n > kMaxEnumerationSize)
    throw ResourceLimitError("enumeration size " + std::to_string(n) + " exceeds the limit of " +
                             std::to_string(kMaxEnumerationSize));
}

/// Visits all 2^{n-1} real positive multiplicative matrices, all-(+1) first.
inline void for_each_real_positive(std::size_t n, const std::function<void(const SignMatrix&)>& visit) {
  check_enumeration_size(n);
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t index = 0; index < count; ++index) visit(sign_matrix_at(n, index));
}

inline std::vector<ComplexMatrix> enumerate_real_positive(std::size_t n) {
  check_enumeration_size(n);
  std::vector<ComplexMatrix> out;
  out.reserve(std::size_t{1} << (n - 1));
  for_each_real_positive(n, [&](const SignMatrix& s) { out.push_back(s.to_matrix()); });
  return out;
}

}  // namespace schurlab
