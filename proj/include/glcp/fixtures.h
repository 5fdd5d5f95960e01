#pragma once

#include <random>
#include <string>
#include <vector>

#include "glcp/graph.h"

namespace glcp {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph edgeless_graph(int n);
/// Center 1, leaves 2..leaves+1.
Graph star_graph(int leaves);
/// Sides 1..a and a+1..a+b.
Graph complete_bipartite_graph(int a, int b);
/// Outer cycle 1..5, spokes i -- i+5, inner pentagram on 6..10.
Graph petersen_graph();
/// Triangle 1-2-3 with pendants 4 (on 1) and 5 (on 2).
Graph bull_graph();
/// Triangle 1-2-3 with a pendant 4 on 3.
Graph paw_graph();
/// K4 minus the edge 1-4.
Graph diamond_graph();
/// Path 1-2-3-4: the gamma tightness example.
Graph tight_gamma_graph();
/// The 11-vertex tree where eta = kappa = 2/3 > gamma: vertex 3 joined to
/// 2, 4, 6, 8, 10 with pendants 1 (on 2), 5 (on 4), 7, 9, 11.
Graph tight_eta_graph();
/// Spider with legs of length 2 and 1 around center 1.
Graph small_tree();

/// Each of the n(n-1)/2 pairs is an edge with probability p.
Graph erdos_renyi(int n, double p, std::mt19937_64& rng);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// The fixture set used by property sweeps.
std::vector<NamedGraph> fixture_set();

}  // namespace glcp
