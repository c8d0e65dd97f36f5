// Multiplicative Schur maps: S_A(BC) = S_A(B) S_A(C).
//
// S_A is multiplicative exactly when a_ij = a_ik a_kj with a_ii = 1, i.e.
// when a_ij = f(i)/f(j) for a vector f of nonzero scalars. Equivalently A is
// rank one with unit diagonal, or Spec(A) = {n, 0, ..., 0} with unit
// diagonal. The certifier below evaluates each of these independently so
// that numerical disagreement shows up instead of being hidden.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schurlab/core_matrix.hpp"
#include "schurlab/random.hpp"

namespace schurlab {

/// f(1..n), all nonzero.
class ScalingVector {
 public:
  ScalingVector() = default;
  explicit ScalingVector(std::vector<Complex> values) : values_(std::move(values)) {
    if (values_.empty()) throw DimensionError("scaling vector must be nonempty");
    for (std::size_t i = 0; i < values_.size(); ++i) {
      const auto& z = values_[i];
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw PreconditionError("scaling values must be finite");
      if (std::abs(z) == 0.0) throw ZeroEntryError(i + 1, 1, "scaling vector: zero value");
    }
  }

  std::size_t size() const noexcept { return values_.size(); }
  const Complex& operator[](std::size_t i) const { return values_[i]; }
  std::span<const Complex> values() const noexcept { return values_; }

 private:
  std::vector<Complex> values_;
};

/// 1-based (i, j, k); `k` is empty for a diagonal violation a_ii != 1.
struct CocycleWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  std::optional<std::size_t> k;
};

struct CocycleResult {
  bool pass = false;
  double residual = 0.0;
  std::optional<CocycleWitness> witness;
};

/// max_{i,j,k} |a_ij - a_ik a_kj| together with max_i |a_ii - 1|, accepted
/// when below tol scaled by max|a_ij|^2.
inline CocycleResult check_cocycle(const ComplexMatrix& a, const Tolerance& tol = Tolerance{}) {
  require_square(a, "check_cocycle");
  const std::size_t n = a.rows();
  CocycleResult out;
  CocycleWitness worst;
  // Diagonal first so that ties report the diagonal violation.
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::abs(a(i, i) - 1.0);
    if (r > out.residual) {
      out.residual = r;
      worst = {i + 1, i + 1, std::nullopt};
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        const double r = std::abs(a(i, j) - aik * a(k, j));
        if (r > out.residual) {
          out.residual = r;
          worst = {i + 1, j + 1, k + 1};
        }
      }
    }
  const double scale = max_abs(a);
  out.pass = out.residual <= tol.threshold(scale * scale);
  if (!out.pass) out.witness = worst;
  return out;
}

/// Extracts f with a_ij = f(i)/f(j) and f(1) = 1, reading off the column whose
/// smallest entry is largest in modulus.
inline ScalingVector factor_scaling(const ComplexMatrix& a, const Tolerance& tol = Tolerance{}) {
  const auto cocycle = check_cocycle(a, tol);
  if (!cocycle.pass)
    throw NotMultiplicativeError("cocycle condition fails (residual " + std::to_string(cocycle.residual) + ")");
  const std::size_t n = a.rows();
  std::size_t pivot = 0;
  double pivot_min = -1.0;
  for (std::size_t j = 0; j < n; ++j) {
    double col_min = std::abs(a(0, j));
    for (std::size_t i = 1; i < n; ++i) col_min = std::min(col_min, std::abs(a(i, j)));
    if (col_min > pivot_min) {
      pivot_min = col_min;
      pivot = j;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(a(i, pivot)) <= tol.abs()) throw ZeroEntryError(i + 1, pivot + 1, "factor_scaling: pivot column entry");
  std::vector<Complex> f(n);
  const Complex head = a(0, pivot);
  for (std::size_t i = 0; i < n; ++i) f[i] = a(i, pivot) / head;
  f[0] = 1.0;
  return ScalingVector(std::move(f));
}

/// a_ij = f(i)/f(j).
inline ComplexMatrix build_from_scaling(const ScalingVector& f) {
  const std::size_t n = f.size();
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j) ? Complex{1.0, 0.0} : f[i] / f[j];
  return a;
}

// ---------------------------------------------------------------------------
// Certificate
// ---------------------------------------------------------------------------

struct ConditionResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

/// Looks up a condition by name; throws std::out_of_range when absent.
inline const ConditionResult& find_condition(const std::vector<ConditionResult>& conditions,
                                             std::string_view name) {
  for (const auto& c : conditions)
    if (c.name == name) return c;
  throw std::out_of_range("no condition named " + std::string(name));
}

struct MultiplicativityCertificate {
  bool verdict = false;
  /// Conditions disagree with each other; a conditioning diagnostic.
  bool inconsistent = false;
  std::vector<ConditionResult> conditions;  // cocycle, unit_diagonal, rank_one, spectrum_0_n, product_sampling
  std::optional<CocycleWitness> witness;
  std::optional<ScalingVector> scaling;

  const ConditionResult& at(std::string_view name) const { return find_condition(conditions, name); }
};

inline double unit_diagonal_defect(const ComplexMatrix& a) {
  require_square(a, "unit_diagonal_defect");
  double d = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) d = std::max(d, std::abs(a(i, i) - 1.0));
  return d;
}

/// Distance of Spec(A) from the multiset {n, 0, ..., 0}.
inline double spectrum_0_n_distance(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Complex> target(n, Complex{});
  target[0] = static_cast<double>(n);
  return spectrum_distance(eigenvalues(a), std::move(target));
}

/// max over `trials` random (B, C) of ‖S_A(BC) − S_A(B) S_A(C)‖ / (‖B‖ ‖C‖ max|a|²).
inline double product_sampling_residual(const ComplexMatrix& a, std::size_t trials, std::uint64_t seed) {
  require_square(a, "product_sampling_residual");
  const std::size_t n = a.rows();
  const double amax = max_abs(a);
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_stream(seed, 0x70726f64ULL, t);
    const auto b = gaussian_matrix(n, n, rng);
    const auto c = gaussian_matrix(n, n, rng);
    const auto lhs = schur_product(a, b * c);
    const auto rhs = schur_product(a, b) * schur_product(a, c);
    const double denom = operator_norm(b) * operator_norm(c) * amax * amax;
    worst = std::max(worst, operator_norm(lhs - rhs) / denom);
  }
  return worst;
}

/// Runs every equivalent characterization of multiplicativity on A.
inline MultiplicativityCertificate certify_multiplicative(const ComplexMatrix& a, const Tolerance& tol = Tolerance{},
                                                          std::size_t trials = 8, std::uint64_t seed = 0) {
  require_square(a, "certify_multiplicative");
  if (max_abs(a) == 0.0) throw PreconditionError("certify_multiplicative: zero matrix");
  if (trials == 0) throw PreconditionError("certify_multiplicative: trials must be positive");
  const std::size_t n = a.rows();
  const double diag = unit_diagonal_defect(a);
  const bool diag_ok = diag <= tol.threshold(1.0);

  MultiplicativityCertificate cert;
  const auto cocycle = check_cocycle(a, tol);
  cert.conditions.push_back({"cocycle", cocycle.pass, cocycle.residual});
  cert.conditions.push_back({"unit_diagonal", diag_ok, diag});

  const auto sv = singular_values(a);
  const std::size_t rank = numerical_rank(a, tol);
  const double rank_residual = sv.size() > 1 && sv.front() > 0.0 ? sv[1] / sv.front() : 0.0;
  cert.conditions.push_back({"rank_one", rank == 1 && diag_ok, std::max(rank_residual, diag)});

  const double spec = spectrum_0_n_distance(a);
  const bool spec_ok = spec <= tol.threshold(static_cast<double>(n) * sv.front());
  cert.conditions.push_back({"spectrum_0_n", spec_ok && diag_ok, std::max(spec, diag)});

  const double prod = product_sampling_residual(a, trials, seed);
  cert.conditions.push_back({"product_sampling", prod <= tol.threshold(1.0), prod});

  const auto passes = std::count_if(cert.conditions.begin(), cert.conditions.end(),
                                    [](const ConditionResult& c) { return c.pass; });
  cert.verdict = passes == static_cast<long>(cert.conditions.size());
  cert.inconsistent = passes != 0 && !cert.verdict;
  if (cert.verdict)
    cert.scaling = factor_scaling(a, tol);
  else if (cocycle.witness)
    cert.witness = cocycle.witness;
  return cert;
}

/// ‖S_A‖ = max_{i,j} |f(i)/f(j)| for multiplicative S_A.
inline double schur_map_norm(const ComplexMatrix& a, const Tolerance& tol = Tolerance{}) {
  const auto f = factor_scaling(a, tol);
  double lo = std::abs(f[0]);
  double hi = lo;
  for (const auto& z : f.values()) {
    lo = std::min(lo, std::abs(z));
    hi = std::max(hi, std::abs(z));
  }
  return hi / lo;
}

struct SupportSample {
  double angle = 0.0;
  double support = 0.0;
};

/// Support function of the numerical range W(A) at equally spaced angles:
/// h(θ) = λ_max((e^{iθ}A + e^{-iθ}A*)/2).
inline std::vector<SupportSample> numerical_range_samples(const ComplexMatrix& a, std::size_t directions) {
  require_square(a, "numerical_range_samples");
  if (directions == 0) throw PreconditionError("numerical_range_samples: directions must be positive");
  std::vector<SupportSample> out;
  out.reserve(directions);
  for (std::size_t k = 0; k < directions; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(directions);
    const auto rotated = std::polar(1.0, theta) * a;
    out.push_back({theta, hermitian_eigen(rotated, false).values.back()});
  }
  return out;
}

}  // namespace schurlab
