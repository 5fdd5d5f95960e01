#pragma once

#include <optional>
#include <span>
#include <vector>

#include "glcp/graph.h"

namespace glcp {

inline constexpr int kDefaultSearchCap = 24;

struct MaximumIndependentSets {
  int size = 0;
  /// Every maximum independent set, sorted lexicographically.
  std::vector<VertexSet> witnesses;
};

struct WeightedIndependentSet {
  double value = 0.0;
  /// Lexicographically smallest optimal set.
  VertexSet witness;
};

/// Exact independence number with all optimal sets, by branch and bound.
/// Throws CapExceeded when n > cap.
MaximumIndependentSets alpha(const Graph& g, int cap = kDefaultSearchCap);

/// Exact weighted independence number. Throws std::invalid_argument for a
/// negative, non-finite or wrongly sized weight vector.
WeightedIndependentSet weighted_alpha(const Graph& g,
                                      std::span<const double> weights,
                                      int cap = kDefaultSearchCap);

/// Clique number; 0 for the empty graph.
int omega(const Graph& g, int cap = kDefaultSearchCap);

/// Lexicographically smallest maximum independent set.
VertexSet first_maximum_independent_set(const Graph& g,
                                        int cap = kDefaultSearchCap);

/// The maximum independent set when it is the only one, otherwise nullopt.
std::optional<VertexSet> unique_maximum_independent_set(
    const Graph& g, int cap = kDefaultSearchCap);

bool has_unique_maximum_independent_set(const Graph& g,
                                        int cap = kDefaultSearchCap);

}  // namespace glcp
