#include "glcp/clique_cover.h"

#include <stdexcept>

namespace glcp {

VertexSet CliqueCover::support() const {
  VertexSet out;
  for (const auto& c : cliques) out = set_union(out, c);
  return out;
}

void validate_cover(const Graph& g, const CliqueCover& cover) {
  if (!cover.anchors.empty() && cover.anchors.size() != cover.cliques.size()) {
    throw std::invalid_argument("cover has " +
                                std::to_string(cover.anchors.size()) +
                                " anchors for " +
                                std::to_string(cover.cliques.size()) +
                                " cliques");
  }
  for (std::size_t a = 0; a < cover.cliques.size(); ++a) {
    const VertexSet& c = cover.cliques[a];
    if (c.empty()) throw std::invalid_argument("cover contains an empty clique");
    g.check_subset(c);
    if (!is_clique(g, c)) {
      throw std::invalid_argument(c.ToString() + " is not a clique");
    }
    if (!cover.anchors.empty() && !c.contains(cover.anchors[a])) {
      throw std::invalid_argument("anchor " + std::to_string(cover.anchors[a]) +
                                  " is not in its clique " + c.ToString());
    }
    for (std::size_t b = 0; b < a; ++b) {
      const VertexSet& d = cover.cliques[b];
      if (!set_intersection(c, d).empty()) {
        throw std::invalid_argument("cliques " + d.ToString() + " and " +
                                    c.ToString() + " overlap");
      }
      if (!are_cliques_independent(g, c, d)) {
        throw std::invalid_argument("cliques " + d.ToString() + " and " +
                                    c.ToString() + " are adjacent");
      }
    }
  }
}

bool is_valid_cover(const Graph& g, const CliqueCover& cover) {
  try {
    validate_cover(g, cover);
    return true;
  } catch (const std::logic_error&) {
    return false;
  }
}

SolutionVector candidate_ics(const LcpInstance& inst, const CliqueCover& cover) {
  validate_cover(inst.graph(), cover);
  std::vector<double> x(inst.size(), 0.0);
  for (const auto& c : cover.cliques) {
    const double value =
        1.0 / (1.0 + (static_cast<double>(c.size()) - 1.0) * inst.delta());
    for (Vertex v : c) x[v - 1] = value;
  }
  return SolutionVector(inst, std::move(x));
}

double candidate_l1(const CliqueCover& cover, double delta) {
  double sum = 0.0;
  for (const auto& c : cover.cliques) {
    const double k = static_cast<double>(c.size());
    sum += k / (1.0 + (k - 1.0) * delta);
  }
  return sum;
}

bool is_union_of_independent_cliques(const Graph& g, const VertexSet& s) {
  for (const auto& comp : connected_components(g, s)) {
    if (!is_clique(g, comp)) return false;
  }
  return true;
}

CliqueCover cover_from_support(const Graph& g, const VertexSet& s) {
  CliqueCover cover;
  cover.cliques = connected_components(g, s);
  validate_cover(g, cover);
  return cover;
}

bool verify_ics(const LcpInstance& inst, std::span<const double> x) {
  if (!verify_solution(inst, x).valid()) return false;
  SolutionVector sv(inst, std::vector<double>(x.begin(), x.end()));
  return is_union_of_independent_cliques(inst.graph(), sv.support());
}

}  // namespace glcp
