#include "glcp/graph_io.h"

#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace glcp {
namespace {

bool is_skippable(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;
}

Graph parse_json_graph(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON graph: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw ParseError("JSON graph needs fields \"n\" and \"edges\"");
  }
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw ParseError("each edge must be a pair [u, v]");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON graph: ") + e.what());
  } catch (const std::logic_error& e) {
    throw ParseError(e.what());
  }
}

Graph parse_text_graph(std::istream& in) {
  std::string line;
  int n = -1;
  long m = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected header \"n m\"");
      }
      continue;
    }
    int u = 0;
    int v = 0;
    if (!(ls >> u >> v)) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected edge \"u v\"");
    }
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError("missing header \"n m\"");
  if (static_cast<long>(edges.size()) != m) {
    throw ParseError("header declares " + std::to_string(m) +
                     " edges but found " + std::to_string(edges.size()));
  }
  try {
    return Graph(n, edges);
  } catch (const std::logic_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_graph_string(text);
}

Graph parse_graph_string(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_json_graph(text);
    break;
  }
  std::istringstream in(text);
  return parse_text_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file: " + path);
  return parse_graph(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::vector<double> parse_vector(std::istream& in) {
  std::vector<double> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    std::istringstream ls(line);
    double value = 0.0;
    std::string rest;
    if (!(ls >> value) || (ls >> rest)) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected a single real number");
    }
    out.push_back(value);
  }
  return out;
}

std::vector<double> read_vector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open vector file: " + path);
  return parse_vector(in);
}

}  // namespace glcp
