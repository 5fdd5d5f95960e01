#pragma once

#include <optional>

#include "glcp/graph.h"
#include "glcp/independence.h"
#include "glcp/lcp.h"

namespace glcp {

/// Positive root of (m + n - 2) d^2 + (3 - m) d - 1 = 0: the smallest delta
/// at which a zero vertex fully adjacent to a clique of size n and touching a
/// clique of size m is held at C >= 1. For m = n = 1 the quadratic degenerates
/// to 2d - 1 and the root 1/2 is returned. Throws for m < 1 or n < 1.
double gamma_mn(int m, int n);

/// Two-clique threshold at (m = omega(G), n = 1). Empty when the graph has no
/// edge (omega <= 1 leaves the expression undefined).
std::optional<double> gamma(const Graph& g, int cap = kDefaultSearchCap);

/// (alpha (omega - 1) - omega) / (alpha (omega - 1)); -infinity when
/// alpha (omega - 1) = 0.
double kappa(const Graph& g, int cap = kDefaultSearchCap);

/// max(gamma, kappa); empty when gamma is undefined.
std::optional<double> eta(const Graph& g, int cap = kDefaultSearchCap);

/// Smallest eigenvalue of the adjacency matrix.
double min_adjacency_eigenvalue(const Graph& g);

/// -1 / lambda_min(A); +infinity for an edgeless graph.
double uniqueness_threshold(const Graph& g);

/// delta (n / (1 + (n-1) delta) + 1 / (1 + (m-1) delta)) >= 1, evaluated
/// through the equivalent quadratic with slack tol. Throws unless
/// 0 < delta < 1 and m, n >= 1.
bool two_clique_condition(double delta, int n_full, int m_other,
                          double tol = kDefaultTolerance);

/// The same condition for a concrete zero vertex i: `full` must be a clique
/// inside N(i), `other` a clique disjoint from `full` meeting N(i), and i in
/// neither. Throws HypothesisNotMet otherwise.
bool two_clique_condition(const LcpInstance& inst, Vertex i,
                          const VertexSet& full, const VertexSet& other);

struct ThresholdReport {
  int alpha = 0;
  int omega = 0;
  std::optional<double> gamma;
  double kappa = 0.0;
  std::optional<double> eta;
  double uniqueness_threshold = 0.0;

  friend bool operator==(const ThresholdReport&,
                         const ThresholdReport&) = default;
};

ThresholdReport compute_thresholds(const Graph& g, int cap = kDefaultSearchCap);

}  // namespace glcp
