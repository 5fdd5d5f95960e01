#pragma once

#include <span>
#include <vector>

#include "glcp/graph.h"
#include "glcp/lcp.h"

namespace glcp {

/// Family of pairwise-disjoint, pairwise-independent cliques. `anchors` is
/// either empty (hand-built cover) or holds one seed vertex per clique.
struct CliqueCover {
  std::vector<VertexSet> cliques;
  std::vector<Vertex> anchors;

  VertexSet support() const;
  friend bool operator==(const CliqueCover&, const CliqueCover&) = default;
};

/// Throws std::invalid_argument describing the first broken invariant.
void validate_cover(const Graph& g, const CliqueCover& cover);
bool is_valid_cover(const Graph& g, const CliqueCover& cover);

/// The only vector that can be an independent clique solution on this
/// support: 1 / (1 + (|C| - 1) delta) on each clique C, 0 elsewhere.
/// Throws std::invalid_argument for an invalid cover.
SolutionVector candidate_ics(const LcpInstance& inst, const CliqueCover& cover);

/// l1 norm of the candidate vector, sum over C of |C| / (1 + (|C| - 1) delta).
double candidate_l1(const CliqueCover& cover, double delta);

/// True when the support of s splits into pairwise-independent cliques, that
/// is every connected component of G[s] is complete.
bool is_union_of_independent_cliques(const Graph& g, const VertexSet& s);

/// Cover whose cliques are the components of G[s]; s must satisfy
/// is_union_of_independent_cliques.
CliqueCover cover_from_support(const Graph& g, const VertexSet& s);

/// x is a solution whose support is a union of independent cliques.
bool verify_ics(const LcpInstance& inst, std::span<const double> x);

}  // namespace glcp
