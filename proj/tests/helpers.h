#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "glcp/fixtures.h"
#include "glcp/graph.h"

namespace testing {

inline const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

/// Seeded random graphs with 1..max_n vertices and mixed densities.
inline std::vector<glcp::Graph> random_graphs(int count, int max_n,
                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, max_n);
  std::uniform_real_distribution<double> density(0.15, 0.75);
  std::vector<glcp::Graph> out;
  for (int k = 0; k < count; ++k) {
    const int n = size(rng);
    out.push_back(glcp::erdos_renyi(n, density(rng), rng));
  }
  return out;
}

/// Fixture graphs plus seeded random graphs, all with at most max_n vertices.
inline std::vector<glcp::Graph> sweep_graphs(int random_count, int max_n,
                                             std::uint64_t seed) {
  std::vector<glcp::Graph> out;
  for (auto& f : glcp::fixture_set()) {
    if (f.graph.num_vertices() <= max_n) out.push_back(f.graph);
  }
  for (auto& g : random_graphs(random_count, max_n, seed)) out.push_back(g);
  return out;
}

}  // namespace testing
