#include "glcp/fixtures.h"

#include <stdexcept>

namespace glcp {

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(1, n);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  }
  return Graph(n, e);
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int v = 2; v <= leaves + 1; ++v) e.emplace_back(1, v);
  return Graph(leaves + 1, e);
}

Graph complete_bipartite_graph(int a, int b) {
  std::vector<Edge> e;
  for (int u = 1; u <= a; ++u) {
    for (int v = a + 1; v <= a + b; ++v) e.emplace_back(u, v);
  }
  return Graph(a + b, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i + 1, (i + 1) % 5 + 1);
    e.emplace_back(i + 1, i + 6);
    e.emplace_back(i + 6, (i + 2) % 5 + 6);
  }
  return Graph(10, e);
}

Graph bull_graph() { return Graph(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}}); }

Graph paw_graph() { return Graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}); }

Graph diamond_graph() {
  return Graph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
}

Graph tight_gamma_graph() { return path_graph(4); }

Graph tight_eta_graph() {
  return Graph(11, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6},
                    {3, 8}, {3, 10}, {6, 7}, {8, 9}, {10, 11}});
}

Graph small_tree() {
  return Graph(6, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}});
}

Graph erdos_renyi(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

std::vector<NamedGraph> fixture_set() {
  return {
      {"single", edgeless_graph(1)},
      {"edgeless3", edgeless_graph(3)},
      {"K2", complete_graph(2)},
      {"K3", complete_graph(3)},
      {"K4", complete_graph(4)},
      {"P3", path_graph(3)},
      {"P4", tight_gamma_graph()},
      {"P5", path_graph(5)},
      {"C4", cycle_graph(4)},
      {"C5", cycle_graph(5)},
      {"C6", cycle_graph(6)},
      {"star4", star_graph(4)},
      {"K2,3", complete_bipartite_graph(2, 3)},
      {"bull", bull_graph()},
      {"paw", paw_graph()},
      {"diamond", diamond_graph()},
      {"tree6", small_tree()},
      {"K3+K3", disjoint_union(complete_graph(3), complete_graph(3))},
      {"petersen", petersen_graph()},
      {"tight_eta", tight_eta_graph()},
  };
}

}  // namespace glcp
