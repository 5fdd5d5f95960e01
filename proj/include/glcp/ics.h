#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glcp/clique_cover.h"
#include "glcp/graph.h"
#include "glcp/lcp.h"

namespace glcp {

/// One pass of the construction loop for a single anchor.
struct IcsIteration {
  Vertex anchor = 0;
  /// The anchor plus its residual neighbors that have exactly one neighbor
  /// in the seed independent set.
  VertexSet clique;
  /// Residual open neighborhood of `clique`.
  VertexSet guard;
  /// clique u guard: the vertices deleted from the residual graph.
  VertexSet removed;
  VertexSet remaining_vertices;
  VertexSet remaining_seed;

  friend bool operator==(const IcsIteration&, const IcsIteration&) = default;
};

struct IcsTrace {
  /// The maximum independent set that seeded the construction.
  VertexSet seed;
  /// Vertices with exactly one neighbor in `seed`, fixed for the whole run.
  VertexSet single_contact;
  std::vector<IcsIteration> iterations;
  /// Per vertex (index v-1): size of the clique holding v, 0 off the support.
  std::vector<int> clique_size;

  /// x(delta): 1 / (1 + (clique_size - 1) delta) on the support, 0 elsewhere.
  std::vector<double> evaluate(double delta) const;

  friend bool operator==(const IcsTrace&, const IcsTrace&) = default;
};

struct IcsResult {
  CliqueCover cover;
  IcsTrace trace;
};

/// Builds an independent clique cover from a maximum independent set. The
/// seed defaults to the lexicographically smallest maximum independent set;
/// anchors are processed in ascending label order. Purely combinatorial: no
/// delta is involved. Throws std::invalid_argument when `mis` is not a
/// maximum independent set.
IcsResult build_ics(const Graph& g,
                    const std::optional<VertexSet>& mis = std::nullopt);

/// Candidate vector of the cover at inst.delta(); verification is separate.
SolutionVector evaluate_ics(const CliqueCover& cover, const LcpInstance& inst);

/// Checks the structural invariants of a construction run and returns a
/// description of each failure (empty when all hold): cliques are cliques and
/// pairwise independent, the removed sets partition V, each anchor's closed
/// clique neighborhood meets the seed only in the anchor, the residual seed
/// stays inside the residual vertex set and is a maximum independent set of
/// the residual graph, and the guard sets are disjoint from each other and
/// from every clique.
std::vector<std::string> check_trace_invariants(const Graph& g,
                                                const IcsResult& result);

/// The cover's candidate vector verifies at every delta' in `deltas_above`.
/// Throws HypothesisNotMet when it does not verify at inst.delta(), and
/// std::invalid_argument for any delta' outside [inst.delta(), 1).
bool persistence_check(const CliqueCover& cover, const LcpInstance& inst,
                       std::span<const double> deltas_above);

/// `base` is LCP_delta(G) with the cover's candidate vector an ICS there;
/// g_plus is G plus vertex n+1, fully adjacent to one cover clique and
/// adjacent to some vertex of another, with delta in [gamma(g_plus), 1).
/// Returns whether the zero-extended vector verifies as an ICS on g_plus.
/// Throws HypothesisNotMet when any of those hypotheses fails.
bool supergraph_extension_check(const LcpInstance& base, const Graph& g_plus,
                                const CliqueCover& cover);

}  // namespace glcp
