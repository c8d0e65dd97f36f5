// Seeded property suites exercising every characterization end to end.
//
// Each suite draws its trial instances from trial_stream(seed, suite, trial),
// so a (suite, trials, seed) triple always reproduces the same failure list.
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "schurlab/completion.hpp"
#include "schurlab/core_matrix.hpp"
#include "schurlab/extreme_points.hpp"
#include "schurlab/group_enumeration.hpp"
#include "schurlab/infinite_truncation.hpp"
#include "schurlab/multiplicative.hpp"
#include "schurlab/random.hpp"
#include "schurlab/star_positive.hpp"

namespace schurlab::verify {

// ---------------------------------------------------------------------------
// Instance generators (shared with the test suites)
// ---------------------------------------------------------------------------

/// Random phases; log-moduli uniform in [-spread, spread].
inline ScalingVector random_scaling(std::size_t n, Rng& rng, double spread = 1.0) {
  std::vector<Complex> f(n);
  for (auto& z : f) z = std::exp(uniform(rng, -spread, spread)) * unit_phase(rng);
  return ScalingVector(std::move(f));
}

inline ScalingVector random_unimodular_scaling(std::size_t n, Rng& rng) { return random_scaling(n, rng, 0.0); }

/// Multiplicative but not *-preserving: moduli spread and |f(n)| pushed away from |f(1)|.
inline ScalingVector random_nonunimodular_scaling(std::size_t n, Rng& rng) {
  const auto base = random_scaling(n, rng);
  std::vector<Complex> f(base.values().begin(), base.values().end());
  f.back() = 2.0 * std::abs(f.front()) * unit_phase(rng);
  return ScalingVector(std::move(f));
}

/// A + δ G with G a dense complex Gaussian matrix; breaks every condition.
inline ComplexMatrix perturb_dense(const ComplexMatrix& a, Rng& rng, double delta = 0.1) {
  return a + Complex{delta, 0.0} * gaussian_matrix(a.rows(), a.cols(), rng);
}

/// A + δ H with H Hermitian and zero on the diagonal; keeps A unital.
inline ComplexMatrix perturb_hermitian_offdiag(const ComplexMatrix& a, Rng& rng, double delta = 0.1) {
  auto g = gaussian_matrix(a.rows(), a.cols(), rng);
  ComplexMatrix h(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) h(i, j) = i == j ? Complex{} : g(i, j) + std::conj(g(j, i));
  return a + Complex{delta, 0.0} * h;
}

/// Random spanning tree on n vertices as undirected pairs (0-based).
inline std::vector<std::pair<std::size_t, std::size_t>> random_spanning_tree(std::size_t n, Rng& rng) {
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t k = 1; k < n; ++k) edges.emplace_back(order[uniform_index(rng, 0, k - 1)], order[k]);
  return edges;
}

/// Specifies each tree edge of A in a random orientation.
inline PartialMatrix mask_to_tree(const ComplexMatrix& a, const std::vector<std::pair<std::size_t, std::size_t>>& tree,
                                  Rng& rng) {
  PartialMatrix p(a.rows());
  for (auto [u, v] : tree) {
    if (uniform_index(rng, 0, 1)) std::swap(u, v);
    p.set(u, v, a(u, v));
  }
  return p;
}

/// Whether the closed vertex cycle (1-based) walks the edge {i, j}.
inline bool cycle_contains_edge(const std::vector<std::size_t>& cycle, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const auto u = cycle[k];
    const auto v = cycle[(k + 1) % cycle.size()];
    if ((u == i && v == j) || (u == j && v == i)) return true;
  }
  return false;
}

/// Unitary from the QR factorization of a Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  const EigenMatrix g = to_eigen(gaussian_matrix(n, n, rng));
  Eigen::HouseholderQR<EigenMatrix> qr(g);
  return from_eigen(qr.householderQ() * EigenMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
}

inline std::string digest(const ComplexMatrix& a) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto mix = [&](const void* p, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(p);
    for (std::size_t k = 0; k < len; ++k) {
      h ^= bytes[k];
      h *= 0x100000001b3ULL;
    }
  };
  const std::uint64_t dims[2] = {a.rows(), a.cols()};
  mix(dims, sizeof dims);
  for (const auto& z : a.entries()) {
    const double parts[2] = {z.real(), z.imag()};
    mix(parts, sizeof parts);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct Failure {
  std::string case_id;
  std::string digest;
  double residual = 0.0;
  std::string detail;
};

struct Report {
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  Tolerance tol;
  std::size_t checks = 0;
  std::vector<Failure> failures;
  double elapsed = 0.0;  // seconds

  bool ok() const noexcept { return failures.empty(); }
};

class Recorder {
 public:
  explicit Recorder(Report& report, std::string suite) : report_(report), suite_(std::move(suite)) {}

  /// Records one check; returns `passed` for chaining.
  bool check(bool passed, std::size_t trial, std::string_view what, const ComplexMatrix& input, double residual) {
    ++report_.checks;
    if (!passed)
      report_.failures.push_back({suite_ + "/" + std::to_string(trial) + "/" + std::string(what), digest(input),
                                  residual, std::string(what)});
    return passed;
  }

  /// A trial that threw counts as one failed check.
  void exception(std::size_t trial, const std::string& what) {
    ++report_.checks;
    report_.failures.push_back({suite_ + "/" + std::to_string(trial) + "/exception", "-", INFINITY, what});
  }

 private:
  Report& report_;
  std::string suite_;
};

inline std::uint64_t suite_stream(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline double max_residual(const std::vector<ConditionResult>& conditions, bool of_passing) {
  double r = 0.0;
  for (const auto& c : conditions)
    if (c.pass == of_passing) r = std::max(r, c.residual);
  return r;
}

inline bool all_pass(const std::vector<ConditionResult>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const ConditionResult& c) { return c.pass; });
}

inline bool none_pass(const std::vector<ConditionResult>& cs) {
  return std::none_of(cs.begin(), cs.end(), [](const ConditionResult& c) { return c.pass; });
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

/// Multiplicativity: every generated instance passes every condition; every
/// perturbed non-instance fails every condition.
inline void suite_thm21(Recorder& rec, std::size_t t, std::uint64_t seed, const Tolerance& tol) {
  auto rng = trial_stream(seed, suite_stream("thm21"), t);
  const std::size_t n = uniform_index(rng, 2, 12);
  const auto f = random_scaling(n, rng);
  const auto a = build_from_scaling(f);
  if (t % 2 == 1) {
    const auto bad = perturb_dense(a, rng);
    const auto cert = certify_multiplicative(bad, tol, 4, seed + t);
    rec.check(none_pass(cert.conditions) && !cert.verdict, t, "non-instance-fails-all", bad,
              max_residual(cert.conditions, true));
    return;
  }
  const auto cert = certify_multiplicative(a, tol, 4, seed + t);
  rec.check(cert.verdict && all_pass(cert.conditions) && !cert.inconsistent, t, "instance-passes-all", a,
            max_residual(cert.conditions, false));

  const auto g = factor_scaling(a, tol);
  double ratio_err = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex want = f[i] / f[j];
      ratio_err = std::max(ratio_err, std::abs(g[i] / g[j] - want) / std::abs(want));
    }
  rec.check(ratio_err <= 1e-10, t, "factor-round-trip", a, ratio_err);

  const auto b = gaussian_matrix(n, n, rng);
  const auto c = gaussian_matrix(n, n, rng);
  const double hom = operator_norm(schur_product(a, b * c) - schur_product(a, b) * schur_product(a, c)) /
                     (operator_norm(b) * operator_norm(c) * std::pow(max_abs(a), 2));
  rec.check(hom <= 1e-8, t, "homomorphism", a, hom);

  const double spec = spectrum_distance(eigenvalues(b), eigenvalues(schur_product(a, b)));
  rec.check(spec <= 1e-7, t, "spectrum-preserved", a, spec);

  const double norm_a = operator_norm(a);
  const double star_inv = operator_norm(adjoint(a) - conjugate(schur_inverse(a, tol)));
  rec.check(star_inv <= 1e-10 * norm_a, t, "adjoint-is-conjugate-schur-inverse", a, star_inv);
  rec.check(norm_a >= static_cast<double>(n) - 1e-8, t, "norm-at-least-n", a, static_cast<double>(n) - norm_a);
}

/// *-preserving multiplicativity: six characterizations agree.
inline void suite_thm24(Recorder& rec, std::size_t t, std::uint64_t seed, const Tolerance& tol) {
  auto rng = trial_stream(seed, suite_stream("thm24"), t);
  const std::size_t n = uniform_index(rng, 2, 12);
  if (t % 2 == 1) {
    const auto bad = (t / 2) % 2 == 0 ? perturb_hermitian_offdiag(build_from_scaling(random_unimodular_scaling(n, rng)), rng)
                                      : build_from_scaling(random_nonunimodular_scaling(n, rng));
    const auto cert = certify_star_multiplicative(bad, tol);
    rec.check(none_pass(cert.conditions) && !cert.verdict, t, "non-instance-fails-all", bad,
              max_residual(cert.conditions, true));
    return;
  }
  const auto a = build_from_scaling(random_unimodular_scaling(n, rng));
  const auto cert = certify_star_multiplicative(a, tol);
  rec.check(cert.verdict && all_pass(cert.conditions), t, "instance-passes-all", a,
            max_residual(cert.conditions, false));
  rec.check(certify_multiplicative(a, tol, 2, seed + t).verdict, t, "instance-is-multiplicative", a, 0.0);

  const double dn = std::abs(operator_norm(a) - static_cast<double>(n));
  rec.check(dn <= 1e-8 * static_cast<double>(n), t, "norm-equals-n", a, dn);

  const auto inv = schur_inverse(a, tol);
  const double to_j = max_abs(schur_product(a, inv) - all_ones(n));
  rec.check(to_j <= 1e-12, t, "schur-inverse-pairs-to-J", a, to_j);
  const double inv_spec = spectrum_0_n_distance(inv);
  rec.check(inv_spec <= 1e-8 * static_cast<double>(n), t, "inverse-spectrum-0-n", a, inv_spec);

  // Numerical range support functions agree for B and S_A(B).
  const auto b = gaussian_matrix(n, n, rng);
  const auto hb = numerical_range_samples(b, 64);
  const auto hab = numerical_range_samples(schur_product(a, b), 64);
  double support = 0.0;
  for (std::size_t k = 0; k < hb.size(); ++k) support = std::max(support, std::abs(hb[k].support - hab[k].support));
  rec.check(support <= 1e-8 * std::max(1.0, operator_norm(b)), t, "numerical-range-preserved", a, support);
}

/// ‖S_A‖ = 1, ‖A‖ = n, A/n orthogonal projection and *-preservation coincide.
inline void suite_prop26(Recorder& rec, std::size_t t, std::uint64_t seed, const Tolerance& tol) {
  auto rng = trial_stream(seed, suite_stream("prop26"), t);
  const std::size_t n = uniform_index(rng, 2, 12);
  const auto a =
      build_from_scaling(t % 2 == 0 ? random_unimodular_scaling(n, rng) : random_nonunimodular_scaling(n, rng));
  const bool star = certify_star_multiplicative(a, tol).verdict;
  const double dn = std::abs(operator_norm(a) - static_cast<double>(n));
  const bool norm_n = dn <= 1e-8 * static_cast<double>(n);
  const bool projection = projection_check(a, tol);
  const bool map_norm_one = std::abs(schur_map_norm(a, tol) - 1.0) <= tol.threshold(1.0);
  rec.check(star == norm_n && norm_n == projection && projection == map_norm_one, t, "four-verdicts-agree", a, dn);
  rec.check(star == (t % 2 == 0), t, "star-matches-construction", a, dn);
}

/// Group axioms of (L^n, ∘), the Toeplitz subgroup, and the enumeration count.
inline void suite_group(Recorder& rec, std::size_t t, std::uint64_t seed, const Tolerance& tol) {
  auto rng = trial_stream(seed, suite_stream("group"), t);
  const std::size_t n = uniform_index(rng, 2, 10);
  const auto a = build_from_scaling(random_unimodular_scaling(n, rng));
  const auto b = build_from_scaling(random_unimodular_scaling(n, rng));
  const auto c = build_from_scaling(random_unimodular_scaling(n, rng));

  const double assoc = max_abs(group_product(group_product(a, b, tol), c, tol) - group_product(a, group_product(b, c, tol), tol));
  rec.check(assoc <= 1e-12, t, "associative", a, assoc);
  const double comm = max_abs(group_product(a, b, tol) - group_product(b, a, tol));
  rec.check(comm <= 1e-12, t, "commutative", a, comm);
  rec.check(group_product(a, all_ones(n), tol) == a, t, "identity-J", a, 0.0);
  const double inv = max_abs(group_product(a, schur_inverse(a, tol), tol) - all_ones(n));
  rec.check(inv <= 1e-12, t, "inverse", a, inv);
  rec.check(check_cocycle(group_product(a, b, tol), tol).pass, t, "closure", a, 0.0);

  const Complex lambda = std::exp(uniform(rng, -0.5, 0.5)) * unit_phase(rng);
  const auto toe = toeplitz_member(lambda, n);
  bool diag_constant = true;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) diag_constant = diag_constant && toe(i, j) == toe(i - 1, j - 1);
  rec.check(diag_constant, t, "toeplitz-constant-diagonals", toe, 0.0);
  rec.check(check_cocycle(toe, tol).pass, t, "toeplitz-multiplicative", toe, check_cocycle(toe, tol).residual);

  const auto two = build_from_scaling(random_scaling(2, rng));
  const double g2 = max_abs(two - toeplitz_member(two(0, 1), 2)) / max_abs(two);
  rec.check(g2 <= 1e-12, t, "G2-equals-L2", two, g2);

  const std::size_t m = 1 + t % 12;
  const auto all = enumerate_real_positive(m);
  bool distinct = true;
  for (std::size_t x = 0; x < all.size() && distinct; ++x)
    for (std::size_t y = x + 1; y < all.size() && distinct; ++y) distinct = !(all[x] == all[y]);
  rec.check(all.size() == (std::size_t{1} << (m - 1)) && distinct, t, "enumeration-count", all_ones(m),
            static_cast<double>(all.size()));
  std::size_t positive = 0;
  for (const auto& e : all)
    if (std::all_of(e.entries().begin(), e.entries().end(), [](const Complex& z) { return z.real() > 0.0; }))
      ++positive, rec.check(e == all_ones(m), t, "positive-member-is-J", e, 0.0);
  rec.check(positive == 1, t, "one-positive-member", all_ones(m), static_cast<double>(positive));
  if (m <= 6)
    for (const auto& e : all) rec.check(certify_star_multiplicative(e, tol).verdict, t, "enumerated-star", e, 0.0);
}

/// Torus parametrization: Φ(z)∘Φ(w) = Φ(zw), images are *-multiplicative.
inline void suite_torus(Recorder& rec, std::size_t t, std::uint64_t seed, const Tolerance& tol) {
  auto rng = trial_stream(seed, suite_stream("torus"), t);
  const std::size_t n = uniform_index(rng, 2, 12);
  std::vector<Complex> z(n - 1), w(n - 1), zw(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    z[k] = unit_phase(rng);
    w[k] = unit_phase(rng);
    zw[k] = z[k] * w[k];
  }
  const auto pz = torus_param(z, tol);
  const double hom = max_abs(schur_product(pz, torus_param(w, tol)) - torus_param(zw, tol));
  rec.check(hom <= 1e-12, t, "torus-homomorphism", pz, hom);
  double row = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) row = std::max(row, std::abs(pz(0, k + 1) - z[k]));
  rec.check(row == 0.0 && pz(0, 0) == Complex{1.0, 0.0}, t, "first-row", pz, row);
  rec.check(certify_star_multiplicative(pz, tol).verdict, t, "torus-image-star", pz, 0.0);

  const auto b = log_coordinates(pz);
  double sym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double s = b(i, j).real() + b(j, i).real();
      sym = std::max({sym, std::abs(s - std::round(s)), std::abs(b(i, j).imag())});
    }
  rec.check(sym <= 1e-12, t, "log-coordinates-antisymmetric", pz, sym);
}

/// Completion: tree recovery, tree independence, cycle detection.
inline void suite_completion(Recorder& rec, std::size_t t, std::uint64_t seed, const Tolerance& tol) {
  auto rng = trial_stream(seed, suite_stream("completion"), t);
  const std::size_t n = uniform_index(rng, 2, 12);
  const bool star = t % 3 == 2;
  const auto a = build_from_scaling(star ? random_unimodular_scaling(n, rng) : random_scaling(n, rng));
  const double scale = operator_norm(a);

  const auto tree = random_spanning_tree(n, rng);
  const auto p = mask_to_tree(a, tree, rng);
  const auto r1 = complete_partial(p, tol, star);
  const bool ok1 = r1.status == CompletionStatus::completed;
  const double err1 = ok1 ? max_abs(*r1.matrix - a) : INFINITY;
  rec.check(ok1 && err1 <= 1e-9 * scale, t, "tree-recovery", a, err1);

  const auto r2 = complete_partial(mask_to_tree(a, random_spanning_tree(n, rng), rng), tol, star);
  const double diff = ok1 && r2.status == CompletionStatus::completed ? max_abs(*r1.matrix - *r2.matrix) : INFINITY;
  rec.check(diff <= 1e-10 * scale, t, "tree-independence", a, diff);

  auto q = p;
  std::size_t i = 0, j = 0;
  do {
    i = uniform_index(rng, 0, n - 1);
    j = uniform_index(rng, 0, n - 1);
  } while (i == j || q.is_specified(i, j));
  const Complex perturbed = a(i, j) * (star ? std::polar(1.0, 1e-3) : Complex{1.0 + 1e-3, 0.0});
  q.set(i, j, perturbed);
  const auto r3 = complete_partial(q, tol, star);
  bool cycle_ok = r3.status == CompletionStatus::inconsistent && !r3.violations.empty();
  for (const auto& v : r3.violations) cycle_ok = cycle_ok && cycle_contains_edge(v.cycle, i + 1, j + 1);
  rec.check(cycle_ok, t, "perturbed-edge-inconsistent", a, r3.violations.empty() ? 0.0 : r3.violations[0].residual);

  if (star && ok1) {
    const auto b = log_coordinates(*r1.matrix);
    double sym = 0.0;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const double s = b(x, y).real() + b(y, x).real();
        sym = std::max({sym, std::abs(s - std::round(s)), std::abs(b(x, y).imag())});
      }
    rec.check(sym <= 1e-10, t, "star-log-coordinates", a, sym);
  }
}

/// Infinite generators through their corners.
inline void suite_schatten(Recorder& rec, std::size_t t, std::uint64_t seed, const Tolerance& tol) {
  auto rng = trial_stream(seed, suite_stream("schatten"), t);
  const std::uint64_t gseed = rng();
  // Pure unimodular scaling rule f(i) = e^{2πiθ_i}, θ_i hashed from (gseed, i).
  const auto phase = [gseed](std::size_t i) {
    const double theta = static_cast<double>(splitmix64(gseed ^ splitmix64(i)) >> 11) * 0x1.0p-53;
    return std::polar(1.0, 2.0 * std::numbers::pi * theta);
  };
  const auto gen = CoefficientGenerator::from_scaling(phase, 1.0);

  for (std::size_t n = 2; n <= 64; n *= 2) {
    const auto w = unboundedness_witness(gen, n, tol);
    const double nn = static_cast<double>(n);
    rec.check(w.lower_bound >= nn - tol.threshold(nn), t, "witness-n" + std::to_string(n), corner(gen, n),
              nn - w.lower_bound);
  }

  const std::size_t m = uniform_index(rng, 2, 16);
  const auto small = factor_scaling(corner(gen, m), tol);
  const auto large = factor_scaling(corner(gen, 2 * m), tol);
  const Complex global = large[0] / small[0];
  double coherence = 0.0;
  for (std::size_t i = 0; i < m; ++i) coherence = std::max(coherence, std::abs(large[i] / small[i] - global));
  rec.check(coherence <= 1e-10, t, "corner-coherence", corner(gen, m), coherence);

  const auto big = corner(gen, 2 * m);
  const double unimod = unimodular_defect(big);
  rec.check(unimod <= 1e-10, t, "hermitian-corner-unimodular", big, unimod);

  const auto table = gaussian_matrix(8, 8, rng);
  const auto tgen = CoefficientGenerator::table(table);
  const double bound = compact_bound_check(tgen, 8, 100, rng());
  rec.check(bound <= max_abs(table) + 1e-10, t, "compact-bound", table, bound - max_abs(table));

  const auto f = random_scaling(m + 4, rng);
  const auto l2 = l2_multiplier_factor_check(CoefficientGenerator::from_scaling(f), m + 4, tol);
  rec.check(l2.multiplicative && l2.f.has_value(), t, "l2-factor-multiplicative", build_from_scaling(f), 0.0);
}

/// Correlation extremity and isometries.
inline void suite_extreme(Recorder& rec, std::size_t t, std::uint64_t seed, const Tolerance& tol) {
  auto rng = trial_stream(seed, suite_stream("extreme"), t);
  const std::size_t n = uniform_index(rng, 2, 6);
  std::vector<Complex> z(n - 1), w(n - 1);
  for (auto& v : z) v = unit_phase(rng);
  for (auto& v : w) v = unit_phase(rng);
  const auto a = torus_param(z, tol);
  const auto b = torus_param(w, tol);
  rec.check(correlation_check(a, tol).rank_one_extreme, t, "torus-image-extreme", a, 0.0);

  const auto mid = Complex{0.5, 0.0} * (a + b);
  const auto v = correlation_check(mid, tol);
  rec.check(v.is_correlation && v.rank >= 2 && !v.rank_one_extreme, t, "midpoint-not-extreme", mid,
            static_cast<double>(v.rank));

  rec.check(!correlation_check(identity(n), tol).rank_one_extreme, t, "identity-not-extreme", identity(n), 0.0);

  const auto sign = sign_matrix_at(n, rng() % (std::uint64_t{1} << (n - 1))).to_matrix();
  rec.check(correlation_check(sign, tol).rank_one_extreme, t, "sign-matrix-extreme", sign, 0.0);

  const auto u = random_unitary(n, rng);
  const auto iso = isometry_check(u, tol);
  rec.check(iso.isometry && iso.coisometry && iso.scalar_multiple && std::abs(*iso.scalar_multiple - 1.0) <= 1e-10,
            t, "unitary-isometry", u, 0.0);
  rec.check(projection_check(a, tol), t, "star-A-over-n-projection", a, 0.0);
}

// One trial: (recorder, trial index, seed, tolerance).
using SuiteFn = void (*)(Recorder&, std::size_t, std::uint64_t, const Tolerance&);

struct SuiteEntry {
  const char* name;
  SuiteFn run;
};

inline const std::vector<SuiteEntry>& suites() {
  static const std::vector<SuiteEntry> table = {
      {"thm21", suite_thm21},       {"thm24", suite_thm24},           {"prop26", suite_prop26},
      {"group", suite_group},       {"torus", suite_torus},           {"completion", suite_completion},
      {"schatten", suite_schatten}, {"extreme", suite_extreme},
  };
  return table;
}

inline bool is_suite_name(std::string_view name) {
  if (name == "all") return true;
  return std::any_of(suites().begin(), suites().end(), [&](const SuiteEntry& s) { return name == s.name; });
}

/// Runs `suite` (or every suite for "all"). Unknown names throw PreconditionError.
inline Report run_suite(std::string_view suite, std::size_t trials, std::uint64_t seed, const Tolerance& tol = Tolerance{}) {
  if (!is_suite_name(suite)) throw PreconditionError("unknown suite '" + std::string(suite) + "'");
  Report report;
  report.suite = std::string(suite);
  report.trials = trials;
  report.seed = seed;
  report.tol = tol;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& s : suites()) {
    if (suite != "all" && suite != s.name) continue;
    Recorder rec(report, s.name);
    for (std::size_t t = 0; t < trials; ++t) {
      try {
        s.run(rec, t, seed, tol);
      } catch (const std::exception& e) {
        rec.exception(t, e.what());
      }
    }
  }
  report.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace schurlab::verify
