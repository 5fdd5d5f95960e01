#include "glcp/graph.h"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace glcp {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

VertexSet VertexSet::FromMask(std::uint64_t mask) {
  VertexSet s;
  while (mask != 0) {
    const int bit = __builtin_ctzll(mask);
    s.members_.push_back(bit + 1);
    mask &= mask - 1;
  }
  return s;
}

std::uint64_t VertexSet::ToMask() const {
  std::uint64_t mask = 0;
  for (Vertex v : members_) {
    if (v < 1 || v > 64) {
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " does not fit in a 64-bit mask");
    }
    mask |= std::uint64_t{1} << (v - 1);
  }
  return mask;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

std::string VertexSet::ToString() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (k) os << ',';
    os << members_[k];
  }
  os << '}';
  return os.str();
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return VertexSet(std::move(out));
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  build({});
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  build(edges);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::build(std::span<const Edge> edges) {
  const auto n = static_cast<std::size_t>(n_);
  adjacency_.assign(n * n, 0);
  std::vector<std::vector<Vertex>> lists(n);
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    char& cell = adjacency_[(u - 1) * n + (v - 1)];
    if (cell) {
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" +
                                  std::to_string(v));
    }
    cell = 1;
    adjacency_[(v - 1) * n + (u - 1)] = 1;
    lists[u - 1].push_back(v);
    lists[v - 1].push_back(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  neighbors_.reserve(n);
  for (auto& l : lists) neighbors_.emplace_back(std::move(l));
}

void Graph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " outside 1.." + std::to_string(n_));
  }
}

void Graph::check_subset(const VertexSet& s) const {
  if (s.empty()) return;
  check_vertex(s.front());
  check_vertex(s.members().back());
}

const VertexSet& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return neighbors_[v - 1];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[(u - 1) * static_cast<std::size_t>(n_) + (v - 1)] != 0;
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
  if (n_ > 64) throw std::length_error("neighbor_mask requires n <= 64");
  return neighbors(v).ToMask();
}

VertexSet Graph::vertices() const {
  std::vector<Vertex> all(n_);
  for (int k = 0; k < n_; ++k) all[k] = k + 1;
  return VertexSet(std::move(all));
}

VertexSet neighbors(const Graph& g, Vertex i) { return g.neighbors(i); }

VertexSet open_neighborhood_of_set(const Graph& g, const VertexSet& k) {
  g.check_subset(k);
  std::vector<Vertex> out;
  for (Vertex v : k) {
    for (Vertex u : g.neighbors(v)) {
      if (!k.contains(u)) out.push_back(u);
    }
  }
  return VertexSet(std::move(out));
}

VertexSet closed_neighborhood_of_set(const Graph& g, const VertexSet& k) {
  return set_union(open_neighborhood_of_set(g, k), k);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  g.check_subset(s);
  std::vector<int> to_child(g.num_vertices() + 1, 0);
  InducedSubgraph out;
  out.to_parent = s.members();
  for (std::size_t k = 0; k < out.to_parent.size(); ++k) {
    to_child[out.to_parent[k]] = static_cast<int>(k) + 1;
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (to_child[u] && to_child[v]) edges.emplace_back(to_child[u], to_child[v]);
  }
  out.graph = Graph(static_cast<int>(s.size()), edges);
  return out;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  g.check_subset(s);
  const auto& m = s.members();
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (g.adjacent(m[a], m[b])) return false;
    }
  }
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  g.check_subset(s);
  const auto& m = s.members();
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (!g.adjacent(m[a], m[b])) return false;
    }
  }
  return true;
}

bool are_cliques_independent(const Graph& g, const VertexSet& c1,
                             const VertexSet& c2) {
  if (!is_clique(g, c1) || !is_clique(g, c2)) {
    throw std::invalid_argument("are_cliques_independent: inputs must be cliques");
  }
  if (!set_intersection(c1, c2).empty()) {
    throw std::invalid_argument(
        "are_cliques_independent: cliques must be disjoint");
  }
  for (Vertex u : c1) {
    for (Vertex v : c2) {
      if (g.adjacent(u, v)) return false;
    }
  }
  return true;
}

bool is_k_dominating(const Graph& g, const VertexSet& d, int k) {
  if (k < 1) throw std::invalid_argument("is_k_dominating: k must be >= 1");
  g.check_subset(d);
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    if (d.contains(v)) continue;
    int hits = 0;
    for (Vertex u : g.neighbors(v)) hits += d.contains(u) ? 1 : 0;
    if (hits < k) return false;
  }
  return true;
}

std::vector<double> characteristic_vector(const Graph& g, const VertexSet& s) {
  g.check_subset(s);
  std::vector<double> x(g.num_vertices(), 0.0);
  for (Vertex v : s) x[v - 1] = 1.0;
  return x;
}

std::vector<VertexSet> connected_components(const Graph& g,
                                            const VertexSet& s) {
  g.check_subset(s);
  std::vector<char> seen(g.num_vertices() + 1, 0);
  std::vector<VertexSet> out;
  for (Vertex root : s) {
    if (seen[root]) continue;
    std::vector<Vertex> comp{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex u : g.neighbors(comp[head])) {
        if (!seen[u] && s.contains(u)) {
          seen[u] = 1;
          comp.push_back(u);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int shift = g1.num_vertices();
  std::vector<Edge> edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(shift + g2.num_vertices(), edges);
}

Graph add_vertex(const Graph& g, const VertexSet& attach) {
  g.check_subset(attach);
  std::vector<Edge> edges = g.edges();
  const Vertex fresh = g.num_vertices() + 1;
  for (Vertex v : attach) edges.emplace_back(v, fresh);
  return Graph(fresh, edges);
}

InducedSubgraph remove_vertex(const Graph& g, Vertex v) {
  g.check_vertex(v);
  return induced_subgraph(g, set_difference(g.vertices(), VertexSet{v}));
}

}  // namespace glcp
