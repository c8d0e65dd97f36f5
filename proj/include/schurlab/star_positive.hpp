// *-preserving multiplicative Schur maps.
//
// For a unital Schur map S_A the following coincide: multiplicative and
// *-preserving; completely positive isomorphism; A rank one and normal; A rank
// one with unimodular entries; A self-adjoint with Spec(A) = {n, 0, ..., 0}
// and ‖S_A‖ = 1; A and A^[-1] both positive.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schurlab/core_matrix.hpp"
#include "schurlab/multiplicative.hpp"

namespace schurlab {

struct PositivityResult {
  bool pass = false;
  double hermitian_defect = 0.0;  // ‖A − A*‖
  double min_eigenvalue = 0.0;    // of the Hermitian part
};

inline PositivityResult positivity(const ComplexMatrix& a, const Tolerance& tol = Tolerance{}) {
  require_square(a, "is_positive_semidefinite");
  const double norm = operator_norm(a);
  PositivityResult out;
  out.hermitian_defect = operator_norm(a - adjoint(a));
  out.min_eigenvalue = hermitian_eigen(a, false).values.front();
  out.pass = out.hermitian_defect <= tol.threshold(norm) && out.min_eigenvalue >= -tol.threshold(norm);
  return out;
}

/// Hermitian with nonnegative spectrum, both to tolerance relative to ‖A‖.
inline bool is_positive_semidefinite(const ComplexMatrix& a, const Tolerance& tol = Tolerance{}) {
  return positivity(a, tol).pass;
}

inline double unimodular_defect(const ComplexMatrix& a) {
  double d = 0.0;
  for (const auto& z : a.entries()) d = std::max(d, std::abs(std::abs(z) - 1.0));
  return d;
}

inline bool is_unimodular(const ComplexMatrix& a, const Tolerance& tol = Tolerance{}) {
  return unimodular_defect(a) <= tol.threshold(1.0);
}

/// A/n is an orthogonal projection: idempotent and self-adjoint.
inline bool projection_check(const ComplexMatrix& a, const Tolerance& tol = Tolerance{}) {
  require_square(a, "projection_check");
  const auto p = (1.0 / static_cast<double>(a.rows())) * a;
  const double scale = tol.threshold(operator_norm(p));
  return operator_norm(p * p - p) <= scale && operator_norm(p - adjoint(p)) <= scale;
}

struct StarCertificate {
  bool verdict = false;
  bool inconsistent = false;
  // star_and_multiplicative, cp_isomorphism_proxy, rank_one_normal_unit_diag,
  // rank_one_unimodular_unit_diag, selfadjoint_spectrum_norm, schur_pair_positive
  std::vector<ConditionResult> conditions;

  const ConditionResult& at(std::string_view name) const { return find_condition(conditions, name); }
};

/// Evaluates all six characterizations of a *-preserving multiplicative map.
/// Requires a unit diagonal (unital S_A).
inline StarCertificate certify_star_multiplicative(const ComplexMatrix& a, const Tolerance& tol = Tolerance{}) {
  require_square(a, "certify_star_multiplicative");
  const double diag = unit_diagonal_defect(a);
  if (diag > tol.threshold(1.0))
    throw PreconditionError("certify_star_multiplicative: diagonal entries must equal 1 (defect " +
                            std::to_string(diag) + ")");
  const std::size_t n = a.rows();
  const auto sv = singular_values(a);
  const double norm = sv.front();
  const double herm = operator_norm(a - adjoint(a));
  const bool herm_ok = herm <= tol.threshold(norm);
  const bool rank_one = numerical_rank(a, tol) == 1;
  const double rank_residual = sv.size() > 1 ? sv[1] / norm : 0.0;

  StarCertificate cert;

  const auto cocycle = check_cocycle(a, tol);
  cert.conditions.push_back({"star_and_multiplicative", cocycle.pass && herm_ok, std::max(cocycle.residual, herm)});

  const auto pos = positivity(a, tol);
  std::optional<PositivityResult> inv_pos;
  double inverse_defect = std::numeric_limits<double>::infinity();
  try {
    const auto inv = schur_inverse(a, tol);
    inv_pos = positivity(inv, tol);
    inverse_defect = max_abs(schur_product(a, inv) - all_ones(n));
  } catch (const ZeroEntryError&) {
    // A^[-1] does not exist; S_A is not injective.
  }
  const auto psd_residual = [](const PositivityResult& p) {
    return std::max(p.hermitian_defect, std::max(0.0, -p.min_eigenvalue));
  };
  const double pair_residual =
      inv_pos ? std::max(psd_residual(pos), psd_residual(*inv_pos)) : std::numeric_limits<double>::infinity();
  const bool pair_ok = pos.pass && inv_pos && inv_pos->pass;
  // S_A and S_{A^[-1]} completely positive and mutually inverse.
  cert.conditions.push_back({"cp_isomorphism_proxy", pair_ok && inverse_defect <= tol.threshold(1.0),
                             std::max(pair_residual, inverse_defect)});

  const auto aa = to_eigen(a);
  const double normal_defect = (aa * aa.adjoint() - aa.adjoint() * aa).norm();
  cert.conditions.push_back({"rank_one_normal_unit_diag", rank_one && normal_defect <= tol.threshold(norm * norm),
                             std::max(rank_residual, normal_defect / (norm * norm))});

  const double unimod = unimodular_defect(a);
  cert.conditions.push_back({"rank_one_unimodular_unit_diag", rank_one && unimod <= tol.threshold(1.0),
                             std::max(rank_residual, unimod)});

  const double spec = spectrum_0_n_distance(a);
  double map_norm_defect = std::numeric_limits<double>::infinity();
  try {
    map_norm_defect = std::abs(schur_map_norm(a, tol) - 1.0);
  } catch (const NotMultiplicativeError&) {
  } catch (const ZeroEntryError&) {
  }
  const bool v_ok = herm_ok && spec <= tol.threshold(static_cast<double>(n) * norm) &&
                    map_norm_defect <= tol.threshold(1.0);
  cert.conditions.push_back({"selfadjoint_spectrum_norm", v_ok, std::max({herm, spec, map_norm_defect})});

  // A^[-1] has diagonal 1/a_ii, so unit diagonals carry over.
  cert.conditions.push_back({"schur_pair_positive", pair_ok, pair_residual});

  const auto passes = std::count_if(cert.conditions.begin(), cert.conditions.end(),
                                    [](const ConditionResult& c) { return c.pass; });
  cert.verdict = passes == static_cast<long>(cert.conditions.size());
  cert.inconsistent = passes != 0 && !cert.verdict;
  return cert;
}

}  // namespace schurlab
