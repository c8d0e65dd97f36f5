// Correlation matrices, rank-one extremity, and isometry tests.
#pragma once

#include <cmath>
#include <optional>

#include "schurlab/core_matrix.hpp"
#include "schurlab/multiplicative.hpp"
#include "schurlab/star_positive.hpp"

namespace schurlab {

struct CorrelationVerdict {
  bool is_correlation = false;
  std::size_t rank = 0;
  /// Rank-one correlation matrices are extreme points of the correlation
  /// set; this is a sufficient condition only.
  bool rank_one_extreme = false;
};

inline CorrelationVerdict correlation_check(const ComplexMatrix& a, const Tolerance& tol = Tolerance{}) {
  require_square(a, "correlation_check");
  CorrelationVerdict v;
  v.is_correlation = is_positive_semidefinite(a, tol) && unit_diagonal_defect(a) <= tol.threshold(1.0);
  v.rank = numerical_rank(a, tol);
  v.rank_one_extreme = v.is_correlation && v.rank == 1;
  return v;
}

struct IsometryVerdict {
  bool isometry = false;    // A*A = I
  bool coisometry = false;  // AA* = I
  std::optional<double> scalar_multiple;  // c with A*A = c²I or AA* = c²I
};

inline IsometryVerdict isometry_check(const ComplexMatrix& a, const Tolerance& tol = Tolerance{}) {
  const auto ata = adjoint(a) * a;
  const auto aat = a * adjoint(a);
  IsometryVerdict v;
  v.isometry = operator_norm(ata - identity(ata.rows())) <= tol.threshold(1.0);
  v.coisometry = operator_norm(aat - identity(aat.rows())) <= tol.threshold(1.0);
  // c² is the mean diagonal of the Gram matrix when it is scalar.
  for (const auto* gram : {&ata, &aat}) {
    const double c2 = trace(*gram).real() / static_cast<double>(gram->rows());
    if (operator_norm(*gram - Complex{c2, 0.0} * identity(gram->rows())) <= tol.threshold(c2)) {
      v.scalar_multiple = std::sqrt(std::max(c2, 0.0));
      break;
    }
  }
  return v;
}

}  // namespace schurlab
