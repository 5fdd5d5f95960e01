#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "glcp/census.h"
#include "glcp/graph.h"

namespace glcp {

/// Slack for comparing objective values across solutions.
inline constexpr double kCompareTolerance = 1e-7;

enum class CheckOutcome { kPassed, kFailed, kSkipped };

std::string to_string(CheckOutcome outcome);

struct TheoremCheck {
  double delta = 0.0;
  std::string name;
  CheckOutcome outcome = CheckOutcome::kSkipped;
  /// Reason for a skip, or the offending numbers for a failure.
  std::string detail;
};

struct TheoremOptions {
  /// Random weight vectors tried by the weighted check at each delta >= 1.
  int trials = 5;
  std::uint64_t seed = 1;
  int cap = kDefaultCensusCap;
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;

  int count(CheckOutcome outcome) const;
  bool all_passed() const { return count(CheckOutcome::kFailed) == 0; }
};

// Check names, in the order they appear in a report.
inline constexpr const char* kCheckIcsOptimal = "max_ics_equals_max_sol";
inline constexpr const char* kCheckWeighted = "weighted_max_sol_equals_alpha_w";
inline constexpr const char* kCheckFullSupport = "ics_dominates_full_support";
inline constexpr const char* kCheckDeletion = "vertex_deletion_monotone";
inline constexpr const char* kCheckUniqueMis = "unique_mis_witness";

/// For every delta in the grid, runs the census and checks:
///  - on [eta, 1): max_ics == max_sol, attained by a cover of alpha cliques;
///  - on [1, inf): weighted max_sol == alpha_w for random weights;
///  - everywhere: every ICS has l1 at least that of every full-support
///    solution;
///  - on [eta, 1): max_ics(G - v) <= max_ics(G) for every vertex v;
///  - on [eta, 1) with a unique MIS S: 1_S attains max_sol.
/// Checks outside their hypotheses are reported as skipped. An edgeless
/// graph has no eta; the lower end of the window is taken as 0 there.
TheoremReport check_optimality_theorems(const Graph& g,
                                        std::span<const double> delta_grid,
                                        const TheoremOptions& options = {});

/// Number of cliques in the support of x, i.e. connected components of the
/// induced subgraph. Only meaningful when the support is a union of
/// independent cliques.
int support_clique_count(const Graph& g, const VertexSet& support);

/// Lower end of the optimality window: eta(g), or 0 when g has no edge.
double optimality_window_start(const Graph& g, int cap = kDefaultCensusCap);

}  // namespace glcp
