#pragma once

#include <json.hpp>

#include "glcp/census.h"
#include "glcp/clique_cover.h"
#include "glcp/graph.h"
#include "glcp/ics.h"
#include "glcp/lcp.h"
#include "glcp/thresholds.h"

namespace glcp {

using Json = nlohmann::json;

// Non-finite reals are written as the strings "inf", "-inf" and "nan";
// undefined thresholds as null. Readers throw std::invalid_argument on
// malformed documents.

Json real_to_json(double v);
double real_from_json(const Json& j);

Json to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const Json& j);

/// {"n": int, "edges": [[u, v], ...]}
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// {"delta", "x", "support", "l1"}. Reading needs the graph to rebuild C(x).
Json to_json(const SolutionVector& s);
SolutionVector solution_from_json(const Json& j, const Graph& g,
                                  double tol = kDefaultTolerance);

Json to_json(const ThresholdReport& r);
ThresholdReport thresholds_from_json(const Json& j);

/// {"cliques": [[ints]], "anchors": [ints]}
Json to_json(const CliqueCover& c);
CliqueCover cover_from_json(const Json& j);

Json to_json(const IcsTrace& t);
IcsTrace trace_from_json(const Json& j);

Json to_json(const Verdict& v);

/// Instance echo, weights, solutions, maxima (index and value), integer
/// solutions and support diagnostics.
Json to_json(const SolutionCensus& c);
SolutionCensus census_from_json(const Json& j);

}  // namespace glcp
