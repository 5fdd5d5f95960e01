#include "glcp/serialize.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace glcp {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing JSON field \"") + key + "\"");
  }
  return j.at(key);
}

std::vector<double> reals_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of reals");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(real_from_json(v));
  return out;
}

Json reals_to_json(std::span<const double> v) {
  Json out = Json::array();
  for (double d : v) out.push_back(real_to_json(d));
  return out;
}

Json optional_real(const std::optional<double>& v) {
  return v ? real_to_json(*v) : Json(nullptr);
}

std::optional<double> optional_real_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return real_from_json(j);
}

Json maximum_to_json(const std::optional<CensusMaximum>& m) {
  if (!m) return nullptr;
  return {{"value", real_to_json(m->value)}, {"index", m->index}};
}

std::optional<CensusMaximum> maximum_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return CensusMaximum{real_from_json(field(j, "value")),
                       field(j, "index").get<std::size_t>()};
}

}  // namespace

Json real_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double real_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw std::invalid_argument("expected a real, got " + j.dump());
}

Json to_json(const VertexSet& s) { return s.members(); }

VertexSet vertex_set_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a vertex list");
  return VertexSet(j.get<std::vector<Vertex>>());
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.num_vertices()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  const int n = field(j, "n").get<int>();
  std::vector<Edge> edges;
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("edge must be a pair, got " + e.dump());
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(n, edges);
}

Json to_json(const SolutionVector& s) {
  return {{"delta", real_to_json(s.delta())},
          {"x", reals_to_json(s.x())},
          {"support", to_json(s.support())},
          {"l1", real_to_json(s.l1())}};
}

SolutionVector solution_from_json(const Json& j, const Graph& g, double tol) {
  const LcpInstance inst(g, real_from_json(field(j, "delta")), tol);
  SolutionVector s(inst, reals_from_json(field(j, "x")));
  if (j.contains("support") && vertex_set_from_json(j["support"]) != s.support()) {
    throw std::invalid_argument("stored support disagrees with x");
  }
  return s;
}

Json to_json(const ThresholdReport& r) {
  return {{"alpha", r.alpha},
          {"omega", r.omega},
          {"gamma", optional_real(r.gamma)},
          {"kappa", real_to_json(r.kappa)},
          {"eta", optional_real(r.eta)},
          {"uniqueness_threshold", real_to_json(r.uniqueness_threshold)}};
}

ThresholdReport thresholds_from_json(const Json& j) {
  ThresholdReport r;
  r.alpha = field(j, "alpha").get<int>();
  r.omega = field(j, "omega").get<int>();
  r.gamma = optional_real_from_json(field(j, "gamma"));
  r.kappa = real_from_json(field(j, "kappa"));
  r.eta = optional_real_from_json(field(j, "eta"));
  r.uniqueness_threshold = real_from_json(field(j, "uniqueness_threshold"));
  return r;
}

Json to_json(const CliqueCover& c) {
  Json cliques = Json::array();
  for (const auto& k : c.cliques) cliques.push_back(to_json(k));
  return {{"cliques", cliques}, {"anchors", c.anchors}};
}

CliqueCover cover_from_json(const Json& j) {
  CliqueCover c;
  for (const auto& k : field(j, "cliques")) c.cliques.push_back(vertex_set_from_json(k));
  if (j.contains("anchors")) c.anchors = j["anchors"].get<std::vector<Vertex>>();
  return c;
}

Json to_json(const IcsTrace& t) {
  Json iterations = Json::array();
  for (const auto& it : t.iterations) {
    iterations.push_back({{"anchor", it.anchor},
                          {"clique", to_json(it.clique)},
                          {"guard", to_json(it.guard)},
                          {"removed", to_json(it.removed)},
                          {"remaining_vertices", to_json(it.remaining_vertices)},
                          {"remaining_seed", to_json(it.remaining_seed)}});
  }
  return {{"seed", to_json(t.seed)},
          {"single_contact", to_json(t.single_contact)},
          {"iterations", iterations},
          {"clique_size", t.clique_size}};
}

IcsTrace trace_from_json(const Json& j) {
  IcsTrace t;
  t.seed = vertex_set_from_json(field(j, "seed"));
  t.single_contact = vertex_set_from_json(field(j, "single_contact"));
  for (const auto& it : field(j, "iterations")) {
    IcsIteration rec;
    rec.anchor = field(it, "anchor").get<Vertex>();
    rec.clique = vertex_set_from_json(field(it, "clique"));
    rec.guard = vertex_set_from_json(field(it, "guard"));
    rec.removed = vertex_set_from_json(field(it, "removed"));
    rec.remaining_vertices = vertex_set_from_json(field(it, "remaining_vertices"));
    rec.remaining_seed = vertex_set_from_json(field(it, "remaining_seed"));
    t.iterations.push_back(std::move(rec));
  }
  t.clique_size = field(j, "clique_size").get<std::vector<int>>();
  return t;
}

Json to_json(const Verdict& v) {
  Json violations = Json::array();
  for (const auto& e : v.violations) {
    violations.push_back({{"vertex", e.vertex},
                          {"condition", to_string(e.condition)},
                          {"residual", real_to_json(e.residual)}});
  }
  return {{"valid", v.valid()}, {"violations", violations}};
}

Json to_json(const SolutionCensus& c) {
  Json solutions = Json::array();
  for (const auto& s : c.solutions) solutions.push_back(to_json(s));
  Json integer = Json::array();
  for (const auto& s : c.integer_solutions) integer.push_back(to_json(s));
  return {
      {"instance",
       {{"graph", to_json(c.instance.graph())},
        {"delta", real_to_json(c.instance.delta())},
        {"tol", real_to_json(c.instance.tol())}}},
      {"weights", reals_to_json(c.weights)},
      {"solutions", solutions},
      {"max_sol", maximum_to_json(c.max_sol)},
      {"max_ics", maximum_to_json(c.max_ics)},
      {"integer_solutions", integer},
      {"diagnostics",
       {{"supports", c.diagnostics.supports},
        {"nonsingular_solutions", c.diagnostics.nonsingular_solutions},
        {"singular_faces", c.diagnostics.singular_faces},
        {"infeasible", c.diagnostics.infeasible}}},
  };
}

SolutionCensus census_from_json(const Json& j) {
  const Json& ij = field(j, "instance");
  const Graph g = graph_from_json(field(ij, "graph"));
  const double tol = real_from_json(field(ij, "tol"));
  SolutionCensus c{LcpInstance(g, real_from_json(field(ij, "delta")), tol),
                   reals_from_json(field(j, "weights")),
                   {}, {}, {}, {}, {}};
  for (const auto& s : field(j, "solutions")) {
    c.solutions.push_back(solution_from_json(s, g, tol));
  }
  c.max_sol = maximum_from_json(field(j, "max_sol"));
  c.max_ics = maximum_from_json(field(j, "max_ics"));
  for (const auto& m : {c.max_sol, c.max_ics}) {
    if (m && m->index >= c.solutions.size()) {
      throw std::invalid_argument("census maximum points past the solution list");
    }
  }
  for (const auto& s : field(j, "integer_solutions")) {
    c.integer_solutions.push_back(vertex_set_from_json(s));
  }
  const Json& d = field(j, "diagnostics");
  c.diagnostics.supports = field(d, "supports").get<std::uint64_t>();
  c.diagnostics.nonsingular_solutions =
      field(d, "nonsingular_solutions").get<std::uint64_t>();
  c.diagnostics.singular_faces = field(d, "singular_faces").get<std::uint64_t>();
  c.diagnostics.infeasible = field(d, "infeasible").get<std::uint64_t>();
  return c;
}

}  // namespace glcp
