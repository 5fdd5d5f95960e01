#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace glcp {

/// Vertex labels are 1-based and contiguous: a graph on n vertices uses 1..n.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex labels. Ordering is lexicographic on
/// the sorted label sequence, which is the tie-breaking order used by every
/// exhaustive search in the library.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  /// Bit k of `mask` stands for vertex k+1.
  static VertexSet FromMask(std::uint64_t mask);
  std::uint64_t ToMask() const;

  bool contains(Vertex v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex front() const { return members_.front(); }

  bool is_subset_of(const VertexSet& other) const;

  std::string ToString() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a,
                                          const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

/// Undirected simple graph on vertices 1..n. Immutable after construction.
class Graph {
 public:
  /// The empty graph (n = 0).
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  /// Throws std::invalid_argument on self-loops or duplicate edges and
  /// std::out_of_range on endpoints outside 1..n.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  /// Edges as (u, v) with u < v, sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  const VertexSet& neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  /// Neighbor bitmask (bit k = vertex k+1). Requires n <= 64.
  std::uint64_t neighbor_mask(Vertex v) const;

  VertexSet vertices() const;
  void check_vertex(Vertex v) const;
  void check_subset(const VertexSet& s) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build(std::span<const Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> neighbors_;
  std::vector<char> adjacency_;
};

/// Induced subgraph relabelled to 1..|s|; `to_parent[k-1]` is the label in the
/// parent graph of subgraph vertex k.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

VertexSet neighbors(const Graph& g, Vertex i);
/// N(K) u K where N(K) is the union of neighborhoods minus K.
VertexSet closed_neighborhood_of_set(const Graph& g, const VertexSet& k);
/// Union of neighborhoods minus K.
VertexSet open_neighborhood_of_set(const Graph& g, const VertexSet& k);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
/// True iff no edge joins c1 and c2. Throws std::invalid_argument when either
/// input is not a clique or the two overlap.
bool are_cliques_independent(const Graph& g, const VertexSet& c1,
                             const VertexSet& c2);
/// Every vertex outside d has at least k neighbors in d. Throws for k < 1.
bool is_k_dominating(const Graph& g, const VertexSet& d, int k);

std::vector<double> characteristic_vector(const Graph& g, const VertexSet& s);

/// Connected components of the subgraph induced by s, each sorted, ordered by
/// smallest member.
std::vector<VertexSet> connected_components(const Graph& g,
                                            const VertexSet& s);

/// Vertices of g2 are shifted by g1.num_vertices().
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Graph with one extra vertex n+1 adjacent to `attach`.
Graph add_vertex(const Graph& g, const VertexSet& attach);

/// g with vertex v removed; labels above v shift down by one.
InducedSubgraph remove_vertex(const Graph& g, Vertex v);

}  // namespace glcp
