// Infinite coefficient matrices modelled by generator rules and probed
// through their leading n x n corners.
//
// A finite probe can refute a claim about the infinite matrix but never prove
// it, so boundedness verdicts are reported as "holds on probe" rather than
// "holds".
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schurlab/core_matrix.hpp"
#include "schurlab/group_enumeration.hpp"
#include "schurlab/multiplicative.hpp"
#include "schurlab/random.hpp"

namespace schurlab {

/// Pure rule (i, j) -> a_ij with 1-based indices.
class CoefficientGenerator {
 public:
  using Rule = std::function<Complex(std::size_t, std::size_t)>;

  explicit CoefficientGenerator(Rule rule, std::optional<double> declared_bound = std::nullopt,
                                std::string description = "custom")
      : rule_(std::move(rule)), declared_bound_(declared_bound), description_(std::move(description)) {}

  Complex operator()(std::size_t i, std::size_t j) const { return rule_(i, j); }
  const std::optional<double>& declared_bound() const noexcept { return declared_bound_; }
  const std::string& description() const noexcept { return description_; }

  /// a_ij = λ^{j-i}.
  static CoefficientGenerator toeplitz(Complex lambda) {
    if (std::abs(lambda) == 0.0) throw ZeroEntryError(1, 1, "toeplitz generator: lambda is zero");
    std::optional<double> bound;
    if (std::abs(lambda) == 1.0) bound = 1.0;
    return CoefficientGenerator(
        [lambda](std::size_t i, std::size_t j) {
          return integer_power(lambda, static_cast<long long>(j) - static_cast<long long>(i));
        },
        bound, "toeplitz");
  }

  /// a_ij = f(i)/f(j) for a rule f on 1-based indices.
  static CoefficientGenerator from_scaling(std::function<Complex(std::size_t)> f,
                                           std::optional<double> declared_bound = std::nullopt) {
    return CoefficientGenerator(
        [f = std::move(f)](std::size_t i, std::size_t j) {
          return i == j ? Complex{1.0, 0.0} : f(i) / f(j);
        },
        declared_bound, "scaling");
  }

  /// a_ij = f(i)/f(j) for finitely many values; indices past the end throw.
  static CoefficientGenerator from_scaling(const ScalingVector& f) {
    double lo = std::abs(f[0]), hi = lo;
    for (const auto& z : f.values()) {
      lo = std::min(lo, std::abs(z));
      hi = std::max(hi, std::abs(z));
    }
    auto values = std::vector<Complex>(f.values().begin(), f.values().end());
    return from_scaling(
        [values = std::move(values)](std::size_t i) {
          if (i == 0 || i > values.size())
            throw DimensionError("scaling generator: index " + std::to_string(i) + " beyond the " +
                                 std::to_string(values.size()) + " given values");
          return values[i - 1];
        },
        hi / lo);
  }

  /// Finite table, extended by zeros.
  static CoefficientGenerator table(ComplexMatrix t) {
    const double bound = max_abs(t);
    return CoefficientGenerator(
        [t = std::move(t)](std::size_t i, std::size_t j) {
          return (i >= 1 && j >= 1 && i <= t.rows() && j <= t.cols()) ? t(i - 1, j - 1) : Complex{};
        },
        bound, "table");
  }

 private:
  Rule rule_;
  std::optional<double> declared_bound_;
  std::string description_;
};

/// Leading principal n x n submatrix.
inline ComplexMatrix corner(const CoefficientGenerator& gen, std::size_t n) {
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = gen(i + 1, j + 1);
  return a;
}

enum class ProbeOutcome { holds_on_probe, refuted, not_probed };

inline const char* to_string(ProbeOutcome o) {
  switch (o) {
    case ProbeOutcome::holds_on_probe: return "holds-on-probe";
    case ProbeOutcome::refuted: return "refuted";
    case ProbeOutcome::not_probed: return "not-probed";
  }
  return "?";
}

struct L2FactorReport {
  bool multiplicative = false;
  std::optional<ScalingVector> f;  // f(i) = a_i1
  bool bounded = false;            // consistent with sup |f| < ∞ on the probe
  bool bounded_away = false;       // consistent with inf |f| > 0 on the probe
  ProbeOutcome bounded_outcome = ProbeOutcome::not_probed;
  ProbeOutcome bounded_away_outcome = ProbeOutcome::not_probed;
  double ratio = 1.0;  // max|f| / min|f| over the probe
};

/// Checks that the probe corner is multiplicative, reads f(i) = a_i1 and
/// looks for growth of sup|f| or decay of inf|f| across the dyadic prefixes
/// probe/4, probe/2, probe. Growth at every step (or a ratio beyond 1/rel)
/// refutes the bound. Probes shorter than 4 are too short to show a trend.
inline L2FactorReport l2_multiplier_factor_check(const CoefficientGenerator& gen, std::size_t probe,
                                                 const Tolerance& tol = Tolerance{}) {
  if (probe < 2) throw PreconditionError("l2_multiplier_factor_check: probe must be at least 2");
  const auto a = corner(gen, probe);
  const auto cocycle = check_cocycle(a, tol);
  if (!cocycle.pass)
    throw NotMultiplicativeError("l2_multiplier_factor_check: corner of size " + std::to_string(probe) +
                                 " is not multiplicative");
  std::vector<Complex> values(probe);
  for (std::size_t i = 0; i < probe; ++i) values[i] = a(i, 0);

  L2FactorReport report;
  report.multiplicative = true;
  report.f = ScalingVector(values);

  const auto prefix_extremes = [&](std::size_t m) {
    double lo = std::abs(values[0]), hi = lo;
    for (std::size_t i = 0; i < m; ++i) {
      lo = std::min(lo, std::abs(values[i]));
      hi = std::max(hi, std::abs(values[i]));
    }
    return std::pair{lo, hi};
  };
  const auto [lo, hi] = prefix_extremes(probe);
  report.ratio = hi / lo;

  if (probe >= 4) {
    const auto q = prefix_extremes(probe / 4);
    const auto h = prefix_extremes(probe / 2);
    const auto grows = [&](double from, double to) { return to > from * (1.0 + tol.rel()); };
    const bool ratio_blowup = tol.rel() > 0.0 && report.ratio >= 1.0 / tol.rel();
    const bool sup_grows = grows(q.second, h.second) && grows(h.second, hi);
    const bool inf_decays = grows(lo, h.first) && grows(h.first, q.first);
    report.bounded_outcome = sup_grows || (ratio_blowup && !inf_decays) ? ProbeOutcome::refuted
                                                                       : ProbeOutcome::holds_on_probe;
    report.bounded_away_outcome = inf_decays || (ratio_blowup && !sup_grows) ? ProbeOutcome::refuted
                                                                            : ProbeOutcome::holds_on_probe;
  }
  report.bounded = report.bounded_outcome == ProbeOutcome::holds_on_probe;
  report.bounded_away = report.bounded_away_outcome == ProbeOutcome::holds_on_probe;
  return report;
}

/// max ‖A_n ∘ T‖ / ‖T‖ over every elementary T = E_ij and `trials` random
/// rank-one T = u v*. Never exceeds max |a_ij| over the corner.
inline double compact_bound_check(const CoefficientGenerator& gen, std::size_t n, std::size_t trials = 1000,
                                  std::uint64_t seed = 0) {
  const auto a = corner(gen, n);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      worst = std::max(worst, operator_norm(schur_product(a, matrix_unit(n, i, j))));
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_stream(seed, 0x636f6d70ULL, t);
    const auto u = gaussian_vector(n, rng);
    const auto v = gaussian_vector(n, rng);
    ComplexMatrix rank_one(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rank_one(i, j) = u[i] * std::conj(v[j]);
    const double tnorm = vector_norm(u) * vector_norm(v);
    worst = std::max(worst, operator_norm(schur_product(a, rank_one)) / tnorm);
  }
  return worst;
}

struct UnboundednessWitness {
  std::vector<Complex> x;  // unit vector
  double lower_bound = 0.0;  // ‖A_n x‖
};

/// Unit eigenvector x of the corner A_n for the eigenvalue n; zero-extended it
/// gives ‖A x‖ ≥ n for the infinite matrix.
inline UnboundednessWitness unboundedness_witness(const CoefficientGenerator& gen, std::size_t n,
                                                  const Tolerance& tol = Tolerance{}) {
  if (n == 0) throw DimensionError("unboundedness_witness: n must be positive");
  const auto a = corner(gen, n);
  const auto cocycle = check_cocycle(a, tol);
  if (!cocycle.pass)
    throw NotMultiplicativeError("unboundedness_witness: corner of size " + std::to_string(n) +
                                 " fails the cocycle condition (residual " + std::to_string(cocycle.residual) + ")");
  UnboundednessWitness w;
  w.x = eigenvector_near(a, Complex{static_cast<double>(n), 0.0});
  w.lower_bound = vector_norm(matvec(a, w.x));
  return w;
}

}  // namespace schurlab
