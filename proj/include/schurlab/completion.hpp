// Completing a partially specified multiplicative coefficient matrix.
//
// Every specified off-diagonal entry a_ij is an edge i -- j of a constraint
// graph carrying the ratio f(i)/f(j). On a connected graph the values of f
// follow by propagation along a breadth-first spanning tree; each non-tree
// edge closes exactly one cycle and is checked against the propagated ratio.
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "schurlab/core_matrix.hpp"
#include "schurlab/multiplicative.hpp"

namespace schurlab {

class PartialMatrix {
 public:
  explicit PartialMatrix(std::size_t n) : n_(n), entries_(n, n), mask_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }

  /// 0-based.
  void set(std::size_t i, std::size_t j, Complex value) {
    bounds(i, j);
    entries_(i, j) = value;
    mask_[i * n_ + j] = 1;
  }
  void clear(std::size_t i, std::size_t j) {
    bounds(i, j);
    entries_(i, j) = 0.0;
    mask_[i * n_ + j] = 0;
  }
  bool is_specified(std::size_t i, std::size_t j) const { return mask_[i * n_ + j] != 0; }
  Complex value(std::size_t i, std::size_t j) const { return entries_(i, j); }

  std::size_t specified_count() const {
    return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), 1));
  }

 private:
  void bounds(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw DimensionError("partial matrix index out of range");
  }

  std::size_t n_;
  ComplexMatrix entries_;
  std::vector<char> mask_;
};

enum class CompletionStatus { completed, inconsistent, underdetermined };

inline const char* to_string(CompletionStatus s) {
  switch (s) {
    case CompletionStatus::completed: return "completed";
    case CompletionStatus::inconsistent: return "inconsistent";
    case CompletionStatus::underdetermined: return "underdetermined";
  }
  return "?";
}

struct CycleViolation {
  std::vector<std::size_t> cycle;  // 1-based vertices; closes back to the first
  std::size_t row = 0;             // 1-based specified entry that failed
  std::size_t col = 0;
  double residual = 0.0;
};

struct CompletionReport {
  CompletionStatus status = CompletionStatus::underdetermined;
  std::optional<ComplexMatrix> matrix;
  std::optional<ScalingVector> scaling;
  std::vector<CycleViolation> violations;
  std::vector<std::vector<std::size_t>> components;  // 1-based, each sorted
};

namespace detail {

struct ConstraintEdge {
  std::size_t from;
  std::size_t to;
  Complex ratio;  // f(from) / f(to)
};

inline std::vector<std::size_t> tree_path(std::size_t u, std::size_t v, const std::vector<std::size_t>& parent,
                                          const std::vector<std::size_t>& depth) {
  std::vector<std::size_t> up;
  std::vector<std::size_t> down;
  while (depth[u] > depth[v]) {
    up.push_back(u);
    u = parent[u];
  }
  while (depth[v] > depth[u]) {
    down.push_back(v);
    v = parent[v];
  }
  while (u != v) {
    up.push_back(u);
    down.push_back(v);
    u = parent[u];
    v = parent[v];
  }
  up.push_back(u);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

}  // namespace detail

/// Fills in a multiplicative matrix agreeing with every specified entry, or
/// explains why none exists (inconsistent) or why it is not unique
/// (underdetermined).
inline CompletionReport complete_partial(const PartialMatrix& p, const Tolerance& tol = Tolerance{},
                                         bool star_preserving = false) {
  const std::size_t n = p.size();
  CompletionReport report;

  std::vector<detail::ConstraintEdge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.is_specified(i, j)) continue;
      const Complex a = p.value(i, j);
      if (std::abs(a) <= tol.abs()) throw ZeroEntryError(i + 1, j + 1, "complete_partial: zero specified entry");
      if (star_preserving && std::abs(std::abs(a) - 1.0) > tol.threshold(1.0))
        throw PreconditionError("complete_partial: entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") is not unimodular");
      if (i == j) {
        const double r = std::abs(a - 1.0);
        if (r > tol.threshold(1.0)) report.violations.push_back({{i + 1}, i + 1, i + 1, r});
      } else {
        edges.push_back({i, j, a});
      }
    }

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(n);  // (neighbour, edge)
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adjacency[edges[e].from].emplace_back(edges[e].to, e);
    adjacency[edges[e].to].emplace_back(edges[e].from, e);
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<Complex> f(n, Complex{1.0, 0.0});
  std::vector<std::size_t> parent(n, kNone), depth(n, 0), component_of(n, kNone);
  std::vector<char> tree_edge(edges.size(), 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (component_of[root] != kNone) continue;
    const std::size_t id = report.components.size();
    report.components.emplace_back();
    std::queue<std::size_t> frontier;
    frontier.push(root);
    component_of[root] = id;
    parent[root] = root;
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      report.components[id].push_back(u + 1);
      for (const auto& [v, e] : adjacency[u]) {
        if (component_of[v] != kNone) continue;
        component_of[v] = id;
        parent[v] = u;
        depth[v] = depth[u] + 1;
        tree_edge[e] = 1;
        const auto& edge = edges[e];
        f[v] = edge.from == u ? f[u] / edge.ratio : f[u] * edge.ratio;
        frontier.push(v);
      }
    }
    std::sort(report.components[id].begin(), report.components[id].end());
  }

  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (tree_edge[e]) continue;
    const auto& edge = edges[e];
    const double r = std::abs(edge.ratio - f[edge.from] / f[edge.to]);
    if (r > tol.threshold(std::abs(edge.ratio))) {
      auto cycle = detail::tree_path(edge.from, edge.to, parent, depth);
      for (auto& v : cycle) ++v;
      report.violations.push_back({std::move(cycle), edge.from + 1, edge.to + 1, r});
    }
  }

  if (!report.violations.empty()) {
    report.status = CompletionStatus::inconsistent;
  } else if (report.components.size() > 1) {
    report.status = CompletionStatus::underdetermined;
  } else {
    report.status = CompletionStatus::completed;
    report.scaling = ScalingVector(f);
    report.matrix = build_from_scaling(*report.scaling);
  }
  return report;
}

/// b_ij = ln(a_ij) / (2πi) on the principal branch, real part reduced to
/// [0, 1). Multiplicative A gives b_ii = 0 and b_ij ≡ b_ik + b_kj (mod 1).
inline ComplexMatrix log_coordinates(const ComplexMatrix& a) {
  ComplexMatrix b(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex z = a(i, j);
      if (std::abs(z) == 0.0) throw ZeroEntryError(i + 1, j + 1, "log_coordinates: zero entry");
      double turn = std::arg(z) / (2.0 * std::numbers::pi);
      if (turn < 0.0) turn += 1.0;
      if (turn >= 1.0) turn -= 1.0;
      b(i, j) = Complex{turn, -std::log(std::abs(z)) / (2.0 * std::numbers::pi)};
    }
  return b;
}

}  // namespace schurlab
