#include "glcp/theorems.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "glcp/clique_cover.h"
#include "glcp/independence.h"
#include "glcp/thresholds.h"

namespace glcp {
namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

TheoremCheck passed(double delta, const char* name, std::string detail = {}) {
  return {delta, name, CheckOutcome::kPassed, std::move(detail)};
}

TheoremCheck failed(double delta, const char* name, std::string detail) {
  return {delta, name, CheckOutcome::kFailed, std::move(detail)};
}

TheoremCheck skipped(double delta, const char* name, std::string detail) {
  return {delta, name, CheckOutcome::kSkipped, std::move(detail)};
}

struct Context {
  const Graph& g;
  const TheoremOptions& options;
  int alpha_g;
  double window;
  std::optional<VertexSet> unique_mis;
};

TheoremCheck check_ics_optimal(const Context& ctx, const SolutionCensus& c) {
  const double d = c.instance.delta();
  if (d < ctx.window) return skipped(d, kCheckIcsOptimal, "below eta");
  if (d >= 1.0) return skipped(d, kCheckIcsOptimal, "delta >= 1");
  if (!c.max_ics) return failed(d, kCheckIcsOptimal, "census has no ICS");
  const double gap = c.max_sol->value - c.max_ics->value;
  if (gap > kCompareTolerance) {
    return failed(d, kCheckIcsOptimal,
                  "max_ics " + fmt(c.max_ics->value) + " < max_sol " +
                      fmt(c.max_sol->value));
  }
  for (std::size_t k = 0; k < c.solutions.size(); ++k) {
    if (!c.is_ics(k)) continue;
    if (c.solutions[k].l1() < c.max_sol->value - kCompareTolerance) continue;
    if (support_clique_count(ctx.g, c.solutions[k].support()) == ctx.alpha_g) {
      return passed(d, kCheckIcsOptimal,
                    "witness " + c.solutions[k].support().ToString());
    }
  }
  return failed(d, kCheckIcsOptimal,
                "no maximizing ICS has alpha = " + std::to_string(ctx.alpha_g) +
                    " cliques");
}

TheoremCheck check_weighted(const Context& ctx, const LcpInstance& inst,
                            std::mt19937_64& rng) {
  const double d = inst.delta();
  if (d < 1.0) return skipped(d, kCheckWeighted, "delta < 1");
  // Rational weights k/8 keep alpha_w exactly representable.
  std::uniform_int_distribution<int> pick(0, 80);
  for (int t = 0; t < ctx.options.trials; ++t) {
    std::vector<double> w(inst.size());
    for (double& v : w) v = pick(rng) / 8.0;
    CensusOptions opts;
    opts.weights = w;
    opts.cap = ctx.options.cap;
    const SolutionCensus c = enumerate_solutions(inst, opts);
    const double aw = weighted_alpha(ctx.g, w).value;
    if (std::abs(c.max_sol->value - aw) > kCompareTolerance) {
      return failed(d, kCheckWeighted,
                    "trial " + std::to_string(t) + ": max_sol " +
                        fmt(c.max_sol->value) + " vs alpha_w " + fmt(aw));
    }
  }
  return passed(d, kCheckWeighted,
                std::to_string(ctx.options.trials) + " weight vectors");
}

TheoremCheck check_full_support(const SolutionCensus& c) {
  const double d = c.instance.delta();
  const int n = c.instance.size();
  double min_ics = INFINITY;
  double max_full = -INFINITY;
  for (std::size_t k = 0; k < c.solutions.size(); ++k) {
    const auto& s = c.solutions[k];
    if (c.is_ics(k)) min_ics = std::min(min_ics, s.l1());
    if (static_cast<int>(s.support().size()) == n) {
      max_full = std::max(max_full, s.l1());
    }
  }
  if (!std::isfinite(min_ics) || !std::isfinite(max_full)) {
    return passed(d, kCheckFullSupport, "vacuous");
  }
  if (min_ics < max_full - kCompareTolerance) {
    return failed(d, kCheckFullSupport,
                  "ICS with l1 " + fmt(min_ics) +
                      " below full-support solution with l1 " + fmt(max_full));
  }
  return passed(d, kCheckFullSupport);
}

TheoremCheck check_deletion(const Context& ctx, const SolutionCensus& c) {
  const double d = c.instance.delta();
  if (d < ctx.window) return skipped(d, kCheckDeletion, "below eta");
  if (d >= 1.0) return skipped(d, kCheckDeletion, "delta >= 1");
  if (!c.max_ics) return failed(d, kCheckDeletion, "census has no ICS");
  for (Vertex v = 1; v <= ctx.g.num_vertices(); ++v) {
    const Graph smaller = remove_vertex(ctx.g, v).graph;
    const auto sub = max_ics(LcpInstance(smaller, d, c.instance.tol()),
                             ctx.options.cap);
    if (!sub) continue;
    if (sub->value > c.max_ics->value + kCompareTolerance) {
      return failed(d, kCheckDeletion,
                    "removing vertex " + std::to_string(v) + " raises max_ics to " +
                        fmt(sub->value) + " > " + fmt(c.max_ics->value));
    }
  }
  return passed(d, kCheckDeletion);
}

TheoremCheck check_unique_mis(const Context& ctx, const SolutionCensus& c) {
  const double d = c.instance.delta();
  if (!ctx.unique_mis) {
    return skipped(d, kCheckUniqueMis, "maximum independent set not unique");
  }
  if (d < ctx.window) return skipped(d, kCheckUniqueMis, "below eta");
  if (d >= 1.0) return skipped(d, kCheckUniqueMis, "delta >= 1");
  const auto x = characteristic_vector(ctx.g, *ctx.unique_mis);
  const auto at = c.find(x);
  if (!at) {
    return failed(d, kCheckUniqueMis,
                  "1_S for S = " + ctx.unique_mis->ToString() +
                      " is not a solution");
  }
  const double l1 = c.solutions[*at].l1();
  if (l1 < c.max_sol->value - kCompareTolerance) {
    return failed(d, kCheckUniqueMis,
                  "1_S has l1 " + fmt(l1) + " < max_sol " + fmt(c.max_sol->value));
  }
  return passed(d, kCheckUniqueMis, "S = " + ctx.unique_mis->ToString());
}

}  // namespace

std::string to_string(CheckOutcome outcome) {
  switch (outcome) {
    case CheckOutcome::kPassed: return "pass";
    case CheckOutcome::kFailed: return "FAIL";
    case CheckOutcome::kSkipped: return "skip";
  }
  return "?";
}

int TheoremReport::count(CheckOutcome outcome) const {
  return static_cast<int>(std::count_if(
      checks.begin(), checks.end(),
      [&](const TheoremCheck& c) { return c.outcome == outcome; }));
}

int support_clique_count(const Graph& g, const VertexSet& support) {
  return static_cast<int>(connected_components(g, support).size());
}

double optimality_window_start(const Graph& g, int cap) {
  return eta(g, cap).value_or(0.0);
}

TheoremReport check_optimality_theorems(const Graph& g,
                                        std::span<const double> delta_grid,
                                        const TheoremOptions& options) {
  const Context ctx{g, options, alpha(g, options.cap).size,
                    optimality_window_start(g, options.cap),
                    unique_maximum_independent_set(g, options.cap)};
  std::mt19937_64 rng(options.seed);
  TheoremReport report;
  for (double d : delta_grid) {
    const LcpInstance inst(g, d);
    CensusOptions opts;
    opts.cap = options.cap;
    const SolutionCensus c = enumerate_solutions(inst, opts);
    report.checks.push_back(check_ics_optimal(ctx, c));
    report.checks.push_back(check_weighted(ctx, inst, rng));
    report.checks.push_back(check_full_support(c));
    report.checks.push_back(check_deletion(ctx, c));
    report.checks.push_back(check_unique_mis(ctx, c));
  }
  return report;
}

}  // namespace glcp
