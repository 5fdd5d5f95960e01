#include "glcp/thresholds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "glcp/errors.h"

namespace glcp {
namespace {

double kappa_from(int alpha, int omega) {
  const double denom = static_cast<double>(alpha) * (omega - 1);
  if (denom == 0.0) return -std::numeric_limits<double>::infinity();
  return (denom - omega) / denom;
}

}  // namespace

double gamma_mn(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("gamma_mn: clique sizes must be >= 1");
  }
  const double a = m + n - 2;
  const double b = 3 - m;
  if (a == 0.0) return 0.5;
  // Positive root of a d^2 + b d - 1; the discriminant b^2 + 4a is positive.
  return (-b + std::sqrt(b * b + 4.0 * a)) / (2.0 * a);
}

std::optional<double> gamma(const Graph& g, int cap) {
  if (g.num_edges() == 0) return std::nullopt;
  return gamma_mn(omega(g, cap), 1);
}

double kappa(const Graph& g, int cap) {
  return kappa_from(alpha(g, cap).size, omega(g, cap));
}

std::optional<double> eta(const Graph& g, int cap) {
  auto gm = gamma(g, cap);
  if (!gm) return std::nullopt;
  return std::max(*gm, kappa(g, cap));
}

double min_adjacency_eigenvalue(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return 0.0;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(u - 1, v - 1) = 1.0;
    a(v - 1, u - 1) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("adjacency eigensolver did not converge");
  }
  return solver.eigenvalues().minCoeff();
}

double uniqueness_threshold(const Graph& g) {
  if (g.num_edges() == 0) return std::numeric_limits<double>::infinity();
  return -1.0 / min_adjacency_eigenvalue(g);
}

bool two_clique_condition(double delta, int n_full, int m_other, double tol) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("two_clique_condition: delta must lie in (0, 1)");
  }
  if (n_full < 1 || m_other < 1) {
    throw std::invalid_argument("two_clique_condition: clique sizes must be >= 1");
  }
  const double quad = (m_other + n_full - 2) * delta * delta +
                      (3 - m_other) * delta - 1.0;
  return quad >= -tol;
}

bool two_clique_condition(const LcpInstance& inst, Vertex i,
                          const VertexSet& full, const VertexSet& other) {
  const Graph& g = inst.graph();
  g.check_vertex(i);
  g.check_subset(full);
  g.check_subset(other);
  if (full.empty() || other.empty()) {
    throw HypothesisNotMet("two-clique check needs two nonempty cliques");
  }
  if (!is_clique(g, full) || !is_clique(g, other)) {
    throw HypothesisNotMet("two-clique check: inputs must be cliques");
  }
  if (!set_intersection(full, other).empty()) {
    throw HypothesisNotMet("two-clique check: cliques must be disjoint");
  }
  if (full.contains(i) || other.contains(i)) {
    throw HypothesisNotMet("two-clique check: vertex lies in a clique");
  }
  const VertexSet& nbr = g.neighbors(i);
  if (!full.is_subset_of(nbr)) {
    throw HypothesisNotMet("two-clique check: vertex is not fully connected "
                           "to the first clique");
  }
  if (set_intersection(other, nbr).empty()) {
    throw HypothesisNotMet("two-clique check: vertex has no neighbor in the "
                           "second clique");
  }
  return two_clique_condition(inst.delta(), static_cast<int>(full.size()),
                              static_cast<int>(other.size()), inst.tol());
}

ThresholdReport compute_thresholds(const Graph& g, int cap) {
  ThresholdReport r;
  r.alpha = alpha(g, cap).size;
  r.omega = omega(g, cap);
  if (g.num_edges() > 0) r.gamma = gamma_mn(r.omega, 1);
  r.kappa = kappa_from(r.alpha, r.omega);
  if (r.gamma) r.eta = std::max(*r.gamma, r.kappa);
  r.uniqueness_threshold = uniqueness_threshold(g);
  return r;
}

}  // namespace glcp
