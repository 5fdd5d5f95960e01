#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "glcp/graph.h"

namespace glcp {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge-list text: '#' lines are comments, the first remaining line is
/// "n m", followed by m lines "u v" with 1-based labels. Input whose first
/// non-blank character is '{' is read as {"n": int, "edges": [[u,v],...]}.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
Graph read_graph_file(const std::string& path);

std::string format_edge_list(const Graph& g);

/// One real per line; blank and '#' lines are skipped.
std::vector<double> parse_vector(std::istream& in);
std::vector<double> read_vector_file(const std::string& path);

}  // namespace glcp
