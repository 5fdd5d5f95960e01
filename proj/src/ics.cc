#include "glcp/ics.h"

#include <stdexcept>

#include "glcp/errors.h"
#include "glcp/independence.h"
#include "glcp/thresholds.h"

namespace glcp {

std::vector<double> IcsTrace::evaluate(double delta) const {
  std::vector<double> x(clique_size.size(), 0.0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (clique_size[k] > 0) {
      x[k] = 1.0 / (1.0 + (clique_size[k] - 1) * delta);
    }
  }
  return x;
}

IcsResult build_ics(const Graph& g, const std::optional<VertexSet>& mis) {
  VertexSet seed;
  if (mis) {
    g.check_subset(*mis);
    if (!is_independent_set(g, *mis)) {
      throw std::invalid_argument("build_ics: " + mis->ToString() +
                                  " is not independent");
    }
    const int a = alpha(g).size;
    if (static_cast<int>(mis->size()) != a) {
      throw std::invalid_argument("build_ics: " + mis->ToString() +
                                  " is not maximum (alpha = " +
                                  std::to_string(a) + ")");
    }
    seed = *mis;
  } else {
    seed = first_maximum_independent_set(g);
  }

  IcsResult result;
  IcsTrace& trace = result.trace;
  trace.seed = seed;
  trace.clique_size.assign(g.num_vertices(), 0);

  std::vector<Vertex> single;
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    if (set_intersection(g.neighbors(v), seed).size() == 1) single.push_back(v);
  }
  trace.single_contact = VertexSet(std::move(single));

  VertexSet residual = g.vertices();
  VertexSet residual_seed = seed;
  for (Vertex anchor : seed) {
    if (!residual.contains(anchor)) {
      throw std::logic_error("build_ics: anchor " + std::to_string(anchor) +
                             " was removed before its turn");
    }
    const VertexSet residual_nbrs = set_intersection(g.neighbors(anchor), residual);
    const VertexSet clique = set_union(
        set_intersection(residual_nbrs, trace.single_contact), VertexSet{anchor});

    std::vector<Vertex> reach;
    for (Vertex c : clique) {
      for (Vertex u : g.neighbors(c)) {
        if (residual.contains(u) && !clique.contains(u)) reach.push_back(u);
      }
    }
    IcsIteration it;
    it.anchor = anchor;
    it.clique = clique;
    it.guard = VertexSet(std::move(reach));
    it.removed = set_union(it.clique, it.guard);
    residual = set_difference(residual, it.removed);
    residual_seed = set_difference(residual_seed, VertexSet{anchor});
    it.remaining_vertices = residual;
    it.remaining_seed = residual_seed;

    for (Vertex c : clique) {
      trace.clique_size[c - 1] = static_cast<int>(clique.size());
    }
    result.cover.cliques.push_back(clique);
    result.cover.anchors.push_back(anchor);
    trace.iterations.push_back(std::move(it));
  }
  return result;
}

SolutionVector evaluate_ics(const CliqueCover& cover, const LcpInstance& inst) {
  return candidate_ics(inst, cover);
}

std::vector<std::string> check_trace_invariants(const Graph& g,
                                                const IcsResult& result) {
  std::vector<std::string> failures;
  const auto& cover = result.cover;
  const auto& trace = result.trace;

  try {
    validate_cover(g, cover);
  } catch (const std::logic_error& e) {
    failures.push_back(std::string("cover: ") + e.what());
  }
  if (cover.cliques.size() != trace.seed.size()) {
    failures.push_back("cover size differs from the seed size");
  }
  if (static_cast<int>(trace.seed.size()) != alpha(g).size) {
    failures.push_back("seed is not a maximum independent set");
  }

  VertexSet removed_so_far;
  VertexSet guards_so_far;
  const VertexSet cliques_all = cover.support();
  for (const auto& it : trace.iterations) {
    if (!set_intersection(removed_so_far, it.removed).empty()) {
      failures.push_back("removed sets overlap at anchor " +
                         std::to_string(it.anchor));
    }
    removed_so_far = set_union(removed_so_far, it.removed);

    const VertexSet touched =
        set_intersection(closed_neighborhood_of_set(g, it.clique), trace.seed);
    if (touched != VertexSet{it.anchor}) {
      failures.push_back("closed neighborhood of clique " + it.clique.ToString() +
                         " meets the seed in " + touched.ToString());
    }

    if (!set_intersection(guards_so_far, it.guard).empty() ||
        !set_intersection(it.guard, cliques_all).empty()) {
      failures.push_back("guard set " + it.guard.ToString() +
                         " overlaps another guard or a clique");
    }
    guards_so_far = set_union(guards_so_far, it.guard);

    if (!it.remaining_seed.is_subset_of(it.remaining_vertices)) {
      failures.push_back("residual seed left the residual graph after anchor " +
                         std::to_string(it.anchor));
    } else {
      const auto sub = induced_subgraph(g, it.remaining_vertices);
      if (alpha(sub.graph).size != static_cast<int>(it.remaining_seed.size()) ||
          !is_independent_set(g, it.remaining_seed)) {
        failures.push_back("residual seed is not a maximum independent set "
                           "after anchor " + std::to_string(it.anchor));
      }
    }
  }
  if (removed_so_far != g.vertices()) {
    failures.push_back("removed sets do not cover V");
  }
  return failures;
}

bool persistence_check(const CliqueCover& cover, const LcpInstance& inst,
                       std::span<const double> deltas_above) {
  for (double d : deltas_above) {
    if (!(d >= inst.delta() && d < 1.0)) {
      throw std::invalid_argument("persistence_check: every delta' must lie in "
                                  "[delta, 1)");
    }
  }
  const SolutionVector base = evaluate_ics(cover, inst);
  if (!verify_ics(inst, base.x())) {
    throw HypothesisNotMet("persistence_check: cover is not an ICS at delta");
  }
  for (double d : deltas_above) {
    const LcpInstance at = inst.with_delta(d);
    if (!verify_ics(at, evaluate_ics(cover, at).x())) return false;
  }
  return true;
}

bool supergraph_extension_check(const LcpInstance& base, const Graph& g_plus,
                                const CliqueCover& cover) {
  const Graph& g = base.graph();
  const int n = g.num_vertices();
  if (g_plus.num_vertices() != n + 1) {
    throw HypothesisNotMet("supergraph must have exactly one extra vertex");
  }
  if (induced_subgraph(g_plus, g.vertices()).graph != g) {
    throw HypothesisNotMet("supergraph does not restrict to the base graph");
  }
  if (!is_valid_cover(g, cover)) {
    throw HypothesisNotMet("cover is not a set of independent cliques");
  }
  const SolutionVector x = evaluate_ics(cover, base);
  if (!verify_ics(base, x.x())) {
    throw HypothesisNotMet("cover is not an ICS of the base instance");
  }
  const Vertex fresh = n + 1;
  const VertexSet& nbr = g_plus.neighbors(fresh);
  bool hypotheses = false;
  for (std::size_t a = 0; a < cover.cliques.size() && !hypotheses; ++a) {
    if (!cover.cliques[a].is_subset_of(nbr)) continue;
    for (std::size_t b = 0; b < cover.cliques.size(); ++b) {
      if (b != a && !set_intersection(cover.cliques[b], nbr).empty()) {
        hypotheses = true;
        break;
      }
    }
  }
  if (!hypotheses) {
    throw HypothesisNotMet("new vertex is not fully adjacent to one cover "
                           "clique while touching another");
  }
  const auto gp = gamma(g_plus);
  if (!gp || base.delta() < *gp || base.delta() >= 1.0) {
    throw HypothesisNotMet("delta is outside [gamma(G'), 1)");
  }
  std::vector<double> extended = x.x();
  extended.push_back(0.0);
  return verify_ics(LcpInstance(g_plus, base.delta(), base.tol()), extended);
}

}  // namespace glcp
