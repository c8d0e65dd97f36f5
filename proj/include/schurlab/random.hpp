// Seeded random streams and random matrix generators.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "schurlab/core_matrix.hpp"

namespace schurlab {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent generator for (seed, stream, index); the same triple always
/// yields the same sequence, regardless of evaluation order.
inline Rng trial_stream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  const std::uint64_t mixed = splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
  return Rng(mixed);
}

/// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
inline Complex gaussian_scalar(Rng& rng) {
  std::normal_distribution<double> dist(0.0, std::sqrt(0.5));
  const double re = dist(rng);
  const double im = dist(rng);
  return {re, im};
}

inline ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (auto& z : m.entries()) z = gaussian_scalar(rng);
  return m;
}

inline std::vector<Complex> gaussian_vector(std::size_t n, Rng& rng) {
  std::vector<Complex> v(n);
  for (auto& z : v) z = gaussian_scalar(rng);
  return v;
}

/// e^{2 pi i theta} with theta uniform in [0, 1).
inline Complex unit_phase(Rng& rng) {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  return std::polar(1.0, 2.0 * std::numbers::pi * dist(rng));
}

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace schurlab
