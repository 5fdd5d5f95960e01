#include "cli.h"

#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "glcp/census.h"
#include "glcp/clique_cover.h"
#include "glcp/errors.h"
#include "glcp/fixtures.h"
#include "glcp/graph_io.h"
#include "glcp/ics.h"
#include "glcp/lcp.h"
#include "glcp/serialize.h"
#include "glcp/theorems.h"
#include "glcp/thresholds.h"

namespace glcp::cli {
namespace {

const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

// Thrown for bad user input that is not a parse error of a file.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double v, int precision = 6) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string vec(std::span<const double> x, int precision = 6) {
  std::string s = "(";
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) s += ", ";
    s += num(x[k], precision);
  }
  return s + ")";
}

double resolve_delta(const std::string& token, const Graph& g, int cap) {
  if (token.empty()) throw UsageError("--delta is required");
  if (token == "golden") return kGolden;
  if (token == "gamma" || token == "eta") {
    const auto v = token == "gamma" ? gamma(g, cap) : eta(g, cap);
    if (!v) {
      throw UsageError(token + " is undefined for a graph without edges");
    }
    return *v;
  }
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size()) {
    throw UsageError("--delta: expected a number, golden, gamma or eta; got '" +
                     token + "'");
  }
  if (!(d > 0.0) || !std::isfinite(d)) throw UsageError("--delta must be positive");
  return d;
}

void print_verdict(std::ostream& out, const Verdict& v) {
  if (v.valid()) {
    out << "verdict: valid\n";
    return;
  }
  out << "verdict: " << v.violations.size() << " violation(s)\n";
  for (const auto& e : v.violations) {
    out << "  vertex " << e.vertex << ": " << to_string(e.condition)
        << ", residual " << num(e.residual, 10) << "\n";
  }
}

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  int thresholds() {
    const Graph g = read_graph_file(cfg_.graph_path);
    const ThresholdReport r = compute_thresholds(g);
    if (json()) {
      out_ << to_json(r).dump(2) << "\n";
      return kOk;
    }
    const std::string undefined = "undefined (omega <= 1)";
    out_ << std::left;
    row("alpha", std::to_string(r.alpha));
    row("omega", std::to_string(r.omega));
    row("gamma", r.gamma ? num(*r.gamma) : undefined);
    row("kappa", num(r.kappa));
    row("eta", r.eta ? num(*r.eta) : undefined);
    row("uniqueness_threshold", num(r.uniqueness_threshold));
    return kOk;
  }

  int ics() {
    const Graph g = read_graph_file(cfg_.graph_path);
    const LcpInstance inst(g, resolve_delta(cfg_.delta, g, cfg_.cap), cfg_.tol);
    std::optional<VertexSet> mis;
    if (!cfg_.mis.empty()) {
      mis = VertexSet(cfg_.mis);
      g.check_subset(*mis);
    }
    const IcsResult res = build_ics(g, mis);
    const SolutionVector x = evaluate_ics(res.cover, inst);
    const Verdict verdict = verify_solution(inst, x.x());
    const bool ok = verify_ics(inst, x.x());
    if (json()) {
      out_ << Json{{"cover", to_json(res.cover)},
                   {"trace", to_json(res.trace)},
                   {"solution", to_json(x)},
                   {"verdict", to_json(verdict)},
                   {"ics", ok}}
                  .dump(2)
           << "\n";
      return ok ? kOk : kVerificationFailure;
    }
    out_ << "delta " << num(inst.delta(), 10) << "\n";
    out_ << "seed " << res.trace.seed.ToString() << ", single-contact set "
         << res.trace.single_contact.ToString() << "\n";
    for (const auto& it : res.trace.iterations) {
      out_ << "  anchor " << it.anchor << ": clique " << it.clique.ToString()
           << ", guard " << it.guard.ToString() << ", remaining "
           << it.remaining_vertices.ToString() << "\n";
    }
    out_ << "cover";
    for (const auto& c : res.cover.cliques) out_ << " " << c.ToString();
    out_ << "\n";
    out_ << "x = " << vec(x.x()) << "\n";
    out_ << "l1 = " << num(x.l1(), 10) << "\n";
    print_verdict(out_, verdict);
    out_ << "independent clique solution: " << (ok ? "yes" : "no") << "\n";
    return ok ? kOk : kVerificationFailure;
  }

  int census() {
    const Graph g = read_graph_file(cfg_.graph_path);
    const LcpInstance inst(g, resolve_delta(cfg_.delta, g, cfg_.cap), cfg_.tol);
    CensusOptions opts;
    opts.cap = cfg_.cap;
    opts.workers = cfg_.workers;
    if (!cfg_.weights_path.empty()) opts.weights = read_vector_file(cfg_.weights_path);
    const SolutionCensus c = enumerate_solutions(inst, opts);
    if (json()) {
      out_ << to_json(c).dump(2) << "\n";
      return kOk;
    }
    out_ << "delta " << num(inst.delta(), 10) << ", " << c.solutions.size()
         << " solution(s)\n";
    for (std::size_t k = 0; k < c.solutions.size(); ++k) {
      const auto& s = c.solutions[k];
      out_ << "  [" << k << "] l1 " << num(s.l1(), 10) << "  support "
           << s.support().ToString() << (c.is_ics(k) ? "  ICS" : "") << "  x "
           << vec(s.x()) << "\n";
    }
    if (c.max_sol) {
      out_ << "max_sol " << num(c.max_sol->value, 10) << " at ["
           << c.max_sol->index << "]\n";
    }
    if (c.max_ics) {
      out_ << "max_ics " << num(c.max_ics->value, 10) << " at ["
           << c.max_ics->index << "]\n";
    } else {
      out_ << "max_ics none\n";
    }
    out_ << "integer solutions:";
    for (const auto& s : c.integer_solutions) out_ << " " << s.ToString();
    out_ << "\n";
    const auto& d = c.diagnostics;
    out_ << "supports " << d.supports << ": nonsingular " << d.nonsingular_solutions
         << ", singular faces " << d.singular_faces << ", infeasible "
         << d.infeasible << "\n";
    return kOk;
  }

  int verify() {
    const Graph g = read_graph_file(cfg_.graph_path);
    const LcpInstance inst(g, resolve_delta(cfg_.delta, g, cfg_.cap), cfg_.tol);
    const auto x = read_vector(inst);
    const Verdict v = verify_solution(inst, x);
    if (json()) {
      Json j = to_json(v);
      j["solution"] = to_json(SolutionVector(inst, x));
      out_ << j.dump(2) << "\n";
      return v.valid() ? kOk : kVerificationFailure;
    }
    const auto c = discounted_closed_neighborhood(inst, x);
    out_ << "vertex  x            C(x)\n";
    for (int i = 0; i < inst.size(); ++i) {
      out_ << std::left << std::setw(8) << i + 1 << std::setw(13) << num(x[i], 8)
           << num(c[i], 8) << "\n";
    }
    print_verdict(out_, v);
    return v.valid() ? kOk : kVerificationFailure;
  }

  int potential_cmd() {
    const Graph g = read_graph_file(cfg_.graph_path);
    const LcpInstance inst(g, resolve_delta(cfg_.delta, g, cfg_.cap), cfg_.tol);
    const auto x = read_vector(inst);
    const double phi = potential(inst, x);
    const bool stationary = is_stationary_point(inst, x);
    if (json()) {
      out_ << Json{{"potential", real_to_json(phi)}, {"stationary", stationary}}
                  .dump(2)
           << "\n";
    } else {
      out_ << "potential " << num(phi, 12) << "\n";
      out_ << "stationary " << (stationary ? "yes" : "no") << "\n";
    }
    return kOk;
  }

  int paper_examples() {
    rows_.clear();
    p4_rows();
    golden_rows();
    eta_rows();
    bool all = true;
    for (const auto& r : rows_) all = all && r.ok;
    if (json()) {
      Json arr = Json::array();
      for (const auto& r : rows_) {
        arr.push_back({{"example", r.name},
                       {"expected", r.expected},
                       {"observed", r.observed},
                       {"pass", r.ok}});
      }
      out_ << Json{{"rows", arr}, {"pass", all}}.dump(2) << "\n";
    } else {
      for (const auto& r : rows_) {
        out_ << (r.ok ? "PASS  " : "FAIL  ") << std::left << std::setw(34)
             << r.name << " expected " << r.expected << "; observed "
             << r.observed << "\n";
      }
    }
    return all ? kOk : kVerificationFailure;
  }

  int random_check() {
    std::mt19937_64 rng(cfg_.seed);
    std::uniform_int_distribution<int> size(2, std::max(2, cfg_.max_n));
    std::uniform_real_distribution<double> density(0.2, 0.7);
    int failures = 0;
    Json graphs = Json::array();
    for (int t = 0; t < cfg_.trials; ++t) {
      const int n = size(rng);
      const Graph g = erdos_renyi(n, density(rng), rng);
      const double lo = optimality_window_start(g, cfg_.cap);
      std::vector<double> grid;
      if (lo < 0.98) grid = {lo + 0.01, (lo + 0.99) / 2.0};
      grid.push_back(1.0);
      grid.push_back(1.5);
      TheoremOptions opts;
      opts.trials = 3;
      opts.seed = rng();
      opts.cap = cfg_.cap;
      const TheoremReport rep = check_optimality_theorems(g, grid, opts);
      failures += rep.count(CheckOutcome::kFailed);
      if (json()) {
        Json checks = Json::array();
        for (const auto& c : rep.checks) {
          checks.push_back({{"delta", c.delta},
                            {"check", c.name},
                            {"outcome", to_string(c.outcome)},
                            {"detail", c.detail}});
        }
        graphs.push_back({{"graph", to_json(g)}, {"checks", checks}});
        continue;
      }
      out_ << "graph " << t << " (n=" << n << ", m=" << g.num_edges()
           << "): pass " << rep.count(CheckOutcome::kPassed) << ", skip "
           << rep.count(CheckOutcome::kSkipped) << ", fail "
           << rep.count(CheckOutcome::kFailed) << "\n";
      for (const auto& c : rep.checks) {
        if (c.outcome != CheckOutcome::kFailed) continue;
        out_ << "  FAIL " << c.name << " at delta " << num(c.delta) << ": "
             << c.detail << "\n";
      }
    }
    if (json()) {
      out_ << Json{{"seed", cfg_.seed}, {"graphs", graphs}, {"failures", failures}}
                  .dump(2)
           << "\n";
    } else {
      out_ << (failures == 0 ? "all checks passed" : "checks failed") << "\n";
    }
    return failures == 0 ? kOk : kVerificationFailure;
  }

 private:
  struct Row {
    std::string name;
    std::string expected;
    std::string observed;
    bool ok;
  };

  bool json() const { return cfg_.format == Format::kJson; }

  void row(const std::string& key, const std::string& value) {
    out_ << std::setw(22) << key << value << "\n";
  }

  std::vector<double> read_vector(const LcpInstance& inst) const {
    auto x = read_vector_file(cfg_.vector_path);
    if (static_cast<int>(x.size()) != inst.size()) {
      throw UsageError("vector file has " + std::to_string(x.size()) +
                       " entries, graph has " + std::to_string(inst.size()) +
                       " vertices");
    }
    return x;
  }

  void p4_rows() {
    const Graph p4 = tight_gamma_graph();
    const IcsResult res = build_ics(p4);
    auto verdict_at = [&](double d) {
      return verify_solution(LcpInstance(p4, d), evaluate_ics(res.cover, LcpInstance(p4, d)).x());
    };
    for (double d : {0.3, 0.5, 0.61, 0.62, 0.7, 0.9, 0.99}) {
      const Verdict v = verdict_at(d);
      std::string observed = v.valid() ? "valid" : "violations at";
      for (const auto& e : v.violations) observed += " " + std::to_string(e.vertex);
      const bool below = d < kGolden;
      const bool ok = below ? (v.violations.size() == 1 &&
                               v.violations[0].vertex == 2 &&
                               v.violations[0].condition == Condition::kFeasibility)
                            : v.valid();
      rows_.push_back({"P4 cover at delta " + num(d),
                       below ? "fails at vertex 2" : "valid", observed, ok});
    }
    // Bisect the validity boundary of the P4 cover.
    double lo = 0.5;
    double hi = 0.7;
    for (int k = 0; k < 60; ++k) {
      const double mid = (lo + hi) / 2.0;
      (verdict_at(mid).valid() ? hi : lo) = mid;
    }
    rows_.push_back({"P4 crossover", "gamma = " + num(kGolden, 12),
                     num(hi, 12), std::abs(hi - kGolden) <= 1e-9});
  }

  void golden_rows() {
    const auto g = gamma(small_tree());
    rows_.push_back({"gamma of a tree", "(sqrt5 - 1)/2 to 1e-12",
                     g ? num(*g, 15) : "undefined",
                     g && std::abs(*g - kGolden) <= 1e-12});
    const double u = uniqueness_threshold(tight_gamma_graph());
    rows_.push_back({"P4 uniqueness threshold", "equals gamma to 1e-9",
                     num(u, 15), std::abs(u - kGolden) <= 1e-9});
  }

  void eta_rows() {
    const Graph g = tight_eta_graph();
    const ThresholdReport r = compute_thresholds(g);
    const bool thr_ok = r.alpha == 6 && r.omega == 2 && r.gamma &&
                        std::abs(*r.gamma - kGolden) <= 1e-12 &&
                        std::abs(r.kappa - 2.0 / 3.0) <= 1e-12 && r.eta &&
                        std::abs(*r.eta - 2.0 / 3.0) <= 1e-12;
    rows_.push_back({"11-vertex thresholds", "alpha 6, omega 2, kappa = eta = 2/3",
                     "alpha " + std::to_string(r.alpha) + ", omega " +
                         std::to_string(r.omega) + ", kappa " + num(r.kappa, 12) +
                         ", eta " + (r.eta ? num(*r.eta, 12) : "undefined"),
                     thr_ok});

    const CliqueCover k2{{{1, 2}, {4, 5}, {6, 7}, {8, 9}, {10, 11}}, {}};
    const VertexSet mis{1, 3, 5, 7, 9, 11};
    for (double d : {0.6, 0.7}) {
      const LcpInstance inst(g, d);
      CensusOptions opts;
      opts.cap = cfg_.cap;
      const SolutionCensus c = enumerate_solutions(inst, opts);
      const bool pair_wins = d < 2.0 / 3.0;
      const double expected = pair_wins ? 10.0 / (1.0 + d) : 6.0;
      const auto& w = c.max_sol_witness();
      const VertexSet want = pair_wins ? k2.support() : mis;
      rows_.push_back({"11-vertex max_sol at delta " + num(d),
                       num(expected, 10) + " at " + want.ToString(),
                       num(c.max_sol->value, 10) + " at " + w.support().ToString(),
                       std::abs(c.max_sol->value - expected) <= 1e-7 &&
                           w.support() == want});
    }
    const double crossover = 2.0 / 3.0;
    rows_.push_back({"11-vertex l1 crossover", "10/(1+delta) = 6 at delta 2/3",
                     num(candidate_l1(k2, crossover), 12),
                     std::abs(candidate_l1(k2, crossover) - 6.0) <= 1e-12});
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  std::vector<Row> rows_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Perturbed graph LCP toolkit: thresholds, independent clique "
               "solutions and exhaustive solution censuses."};
  app.require_subcommand(1);

  std::string format = "table";
  auto common = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "Numeric tolerance")->check(CLI::NonNegativeNumber);
    sub->add_option("--cap", cfg.cap, "Vertex cap for exhaustive routines")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
  };
  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", cfg.graph_path, "Graph file (edge list or JSON)")
        ->required();
  };
  auto delta_arg = [&](CLI::App* sub) {
    sub->add_option("--delta", cfg.delta, "Decimal, golden, gamma or eta")->required();
  };

  auto* thr = app.add_subcommand("thresholds", "alpha, omega, gamma, kappa, eta");
  graph_arg(thr);
  common(thr);

  auto* ics = app.add_subcommand("ics", "Build and verify the independent clique solution");
  graph_arg(ics);
  delta_arg(ics);
  ics->add_option("--mis", cfg.mis, "Seed maximum independent set, e.g. 1,3")
      ->delimiter(',');
  common(ics);

  auto* census = app.add_subcommand("census", "Enumerate every solution");
  graph_arg(census);
  delta_arg(census);
  census->add_option("--weights", cfg.weights_path, "Weights file, one per line");
  census->add_option("--workers", cfg.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  common(census);

  auto* verify = app.add_subcommand("verify", "Check the complementarity conditions");
  graph_arg(verify);
  verify->add_option("vector", cfg.vector_path, "Vector file, one entry per line")
      ->required();
  delta_arg(verify);
  common(verify);

  auto* pot = app.add_subcommand("potential", "Potential value and stationarity");
  graph_arg(pot);
  pot->add_option("vector", cfg.vector_path, "Vector file, one entry per line")
      ->required();
  delta_arg(pot);
  common(pot);

  auto* paper = app.add_subcommand("paper-examples", "Reproduce the tightness examples");
  common(paper);

  auto* rnd = app.add_subcommand("random-check", "Seeded random-graph theorem sweep");
  rnd->add_option("--seed", cfg.seed, "Random seed");
  rnd->add_option("--trials", cfg.trials, "Number of random graphs")
      ->check(CLI::PositiveNumber);
  rnd->add_option("--max-n", cfg.max_n, "Largest vertex count")
      ->check(CLI::Range(2, 16));
  common(rnd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  cfg.format = format == "json" ? Format::kJson : Format::kTable;
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    Runner r(cfg, out);
    if (cfg.command == "thresholds") return r.thresholds();
    if (cfg.command == "ics") return r.ics();
    if (cfg.command == "census") return r.census();
    if (cfg.command == "verify") return r.verify();
    if (cfg.command == "potential") return r.potential_cmd();
    if (cfg.command == "paper-examples") return r.paper_examples();
    return r.random_check();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace glcp::cli
