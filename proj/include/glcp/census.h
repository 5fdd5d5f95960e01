#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "glcp/graph.h"
#include "glcp/lcp.h"

namespace glcp {

inline constexpr int kDefaultCensusCap = 20;
/// Coordinates are rounded to this grid when deduplicating solutions.
inline constexpr double kDedupGrid = 1e-7;
/// Slack used when comparing objective values between census members.
inline constexpr double kObjectiveTie = 1e-9;

struct CensusOptions {
  /// Objective weights; unit weights when empty.
  std::vector<double> weights;
  int cap = kDefaultCensusCap;
  /// Worker threads for support enumeration. Output does not depend on it.
  int workers = 1;
};

struct SupportDiagnostics {
  std::uint64_t supports = 0;
  /// Nonsingular principal system with a verified solution.
  std::uint64_t nonsingular_solutions = 0;
  /// Singular principal system with a nonempty solution face.
  std::uint64_t singular_faces = 0;
  /// Everything else: negative or infeasible systems, empty faces.
  std::uint64_t infeasible = 0;

  friend bool operator==(const SupportDiagnostics&,
                         const SupportDiagnostics&) = default;
};

struct CensusMaximum {
  double value = 0.0;
  /// Index into SolutionCensus::solutions.
  std::size_t index = 0;

  friend bool operator==(const CensusMaximum&, const CensusMaximum&) = default;
};

/// Every solution of a small instance, found by support enumeration.
struct SolutionCensus {
  LcpInstance instance;
  std::vector<double> weights;
  /// Deduplicated, in discovery order (supports by size, then
  /// lexicographically).
  std::vector<SolutionVector> solutions;
  /// Maximum of weights'x over all solutions.
  std::optional<CensusMaximum> max_sol;
  /// Maximum of weights'x over solutions whose support is a union of
  /// independent cliques.
  std::optional<CensusMaximum> max_ics;
  /// Supports of the binary solutions.
  std::vector<VertexSet> integer_solutions;
  SupportDiagnostics diagnostics;

  const SolutionVector& max_sol_witness() const;
  const SolutionVector& max_ics_witness() const;
  /// Index of a solution equal to x on the dedup grid, if any.
  std::optional<std::size_t> find(std::span<const double> x) const;
  bool is_ics(std::size_t index) const;
};

/// Enumerates the solutions of inst by solving (I + delta A)[S,S] x_S = 1 on
/// every support S. Singular systems are handled by maximizing the weighted
/// objective over the solution face with a small LP and recording the
/// vertices it visits. Throws CapExceeded when n > cap.
SolutionCensus enumerate_solutions(const LcpInstance& inst,
                                   const CensusOptions& options = {});

/// Supports in census order: by size, then lexicographically.
std::vector<std::uint32_t> census_support_order(int n);

/// Rounded coordinates used as a deduplication key.
std::vector<std::int64_t> dedup_key(std::span<const double> x);

struct CensusWitness {
  double value = 0.0;
  SolutionVector witness;
};

CensusWitness max_sol(const LcpInstance& inst,
                      std::span<const double> weights = {},
                      int cap = kDefaultCensusCap);
/// Empty when no solution is an ICS.
std::optional<CensusWitness> max_ics(const LcpInstance& inst,
                                     int cap = kDefaultCensusCap);

/// Every ceil(1/delta)-dominating independent set, by subset enumeration, in
/// census order.
std::vector<VertexSet> integer_solutions(const LcpInstance& inst,
                                         int cap = kDefaultCensusCap);

}  // namespace glcp
