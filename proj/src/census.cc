#include "glcp/census.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>

#include "glcp/clique_cover.h"
#include "glcp/errors.h"
#include "glcp/face_lp.h"

namespace glcp {
namespace {

constexpr double kSingularThreshold = 1e-9;

struct Partial {
  std::vector<std::vector<double>> candidates;
  SupportDiagnostics diagnostics;
};

std::vector<double> checked_weights(const LcpInstance& inst,
                                    std::span<const double> weights) {
  if (weights.empty()) return std::vector<double>(inst.size(), 1.0);
  if (static_cast<int>(weights.size()) != inst.size()) {
    throw std::invalid_argument("weight vector has " +
                                std::to_string(weights.size()) +
                                " entries, graph has " +
                                std::to_string(inst.size()) + " vertices");
  }
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("weights must be finite and nonnegative");
    }
  }
  return {weights.begin(), weights.end()};
}

class SupportSolver {
 public:
  SupportSolver(const LcpInstance& inst, const std::vector<double>& weights)
      : inst_(inst), weights_(weights), n_(inst.size()) {
    adjacency_ = Eigen::MatrixXd::Zero(n_, n_);
    for (auto [u, v] : inst.graph().edges()) {
      adjacency_(u - 1, v - 1) = 1.0;
      adjacency_(v - 1, u - 1) = 1.0;
    }
  }

  void process(std::uint32_t mask, Partial& out) const {
    ++out.diagnostics.supports;
    std::vector<int> in;
    std::vector<int> off;
    for (int v = 0; v < n_; ++v) {
      ((mask >> v) & 1u ? in : off).push_back(v);
    }
    const int k = static_cast<int>(in.size());
    Eigen::MatrixXd m(k, k);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        m(a, b) = (a == b ? 1.0 : 0.0) + inst_.delta() * adjacency_(in[a], in[b]);
      }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    lu.setThreshold(kSingularThreshold);
    if (k == 0 || lu.rank() == k) {
      const Eigen::VectorXd xs =
          k == 0 ? Eigen::VectorXd(0)
                 : Eigen::VectorXd(lu.solve(Eigen::VectorXd::Ones(k)));
      std::vector<double> x(n_, 0.0);
      for (int a = 0; a < k; ++a) {
        if (!(xs(a) > inst_.tol())) {
          ++out.diagnostics.infeasible;
          return;
        }
        x[in[a]] = xs(a);
      }
      if (verify_solution(inst_, x).valid()) {
        ++out.diagnostics.nonsingular_solutions;
        out.candidates.push_back(std::move(x));
      } else {
        ++out.diagnostics.infeasible;
      }
      return;
    }
    solve_face(in, off, m, out);
  }

 private:
  void solve_face(const std::vector<int>& in, const std::vector<int>& off,
                  const Eigen::MatrixXd& m, Partial& out) const {
    const int k = static_cast<int>(in.size());
    LinearProgram lp;
    lp.eq = m;
    lp.eq_rhs = Eigen::VectorXd::Ones(k);
    lp.ge = Eigen::MatrixXd(static_cast<Eigen::Index>(off.size()), k);
    for (std::size_t r = 0; r < off.size(); ++r) {
      for (int a = 0; a < k; ++a) {
        lp.ge(static_cast<Eigen::Index>(r), a) =
            inst_.delta() * adjacency_(off[r], in[a]);
      }
    }
    lp.ge_rhs = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(off.size()));
    lp.objective = Eigen::VectorXd(k);
    for (int a = 0; a < k; ++a) lp.objective(a) = weights_[in[a]];

    const LpResult res = maximize(lp, kSingularThreshold);
    if (res.status != LpStatus::kOptimal) {
      ++out.diagnostics.infeasible;
      return;
    }
    bool any = false;
    for (const auto& vertex : res.vertices) {
      std::vector<double> x(n_, 0.0);
      for (int a = 0; a < k; ++a) {
        x[in[a]] = std::abs(vertex(a)) <= inst_.tol() ? 0.0 : vertex(a);
      }
      if (verify_solution(inst_, x).valid()) {
        out.candidates.push_back(std::move(x));
        any = true;
      }
    }
    ++(any ? out.diagnostics.singular_faces : out.diagnostics.infeasible);
  }

  const LcpInstance& inst_;
  const std::vector<double>& weights_;
  int n_;
  Eigen::MatrixXd adjacency_;
};

bool key_less(const std::vector<std::int64_t>& a,
              const std::vector<std::int64_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Maximum of weights'x over the selected members; ties within kObjectiveTie
// go to the lexicographically greatest vector.
template <typename Pred>
std::optional<CensusMaximum> best_of(const std::vector<SolutionVector>& sols,
                                     const std::vector<double>& weights,
                                     Pred&& selected) {
  std::optional<CensusMaximum> best;
  std::vector<std::int64_t> best_key;
  for (std::size_t k = 0; k < sols.size(); ++k) {
    if (!selected(k)) continue;
    const double value = sols[k].weighted_l1(weights);
    auto key = dedup_key(sols[k].x());
    if (!best || value > best->value + kObjectiveTie ||
        (value >= best->value - kObjectiveTie && key_less(best_key, key))) {
      best = CensusMaximum{value, k};
      best_key = std::move(key);
    }
  }
  return best;
}

bool is_binary(const SolutionVector& s, double tol) {
  for (double v : s.x()) {
    if (std::abs(v) > tol && std::abs(v - 1.0) > tol) return false;
  }
  return true;
}

void check_census_cap(const LcpInstance& inst, int cap) {
  if (inst.size() > cap || inst.size() > 31) {
    throw CapExceeded("solution census", inst.size(), std::min(cap, 31));
  }
}

}  // namespace

std::vector<std::uint32_t> census_support_order(int n) {
  std::vector<std::uint32_t> order;
  order.reserve(std::size_t{1} << n);
  std::vector<int> idx;
  for (int k = 0; k <= n; ++k) {
    idx.resize(k);
    for (int a = 0; a < k; ++a) idx[a] = a;
    while (true) {
      std::uint32_t mask = 0;
      for (int a : idx) mask |= std::uint32_t{1} << a;
      order.push_back(mask);
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == n - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int a = pos + 1; a < k; ++a) idx[a] = idx[a - 1] + 1;
    }
  }
  return order;
}

std::vector<std::int64_t> dedup_key(std::span<const double> x) {
  std::vector<std::int64_t> key(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    key[k] = std::llround(x[k] / kDedupGrid);
  }
  return key;
}

const SolutionVector& SolutionCensus::max_sol_witness() const {
  if (!max_sol) throw std::logic_error("census has no solutions");
  return solutions[max_sol->index];
}

const SolutionVector& SolutionCensus::max_ics_witness() const {
  if (!max_ics) throw std::logic_error("census has no independent clique solution");
  return solutions[max_ics->index];
}

std::optional<std::size_t> SolutionCensus::find(std::span<const double> x) const {
  const auto key = dedup_key(x);
  for (std::size_t k = 0; k < solutions.size(); ++k) {
    if (dedup_key(solutions[k].x()) == key) return k;
  }
  return std::nullopt;
}

bool SolutionCensus::is_ics(std::size_t index) const {
  return is_union_of_independent_cliques(instance.graph(),
                                         solutions.at(index).support());
}

SolutionCensus enumerate_solutions(const LcpInstance& inst,
                                   const CensusOptions& options) {
  check_census_cap(inst, options.cap);
  const std::vector<double> weights = checked_weights(inst, options.weights);
  const std::vector<std::uint32_t> order = census_support_order(inst.size());
  const SupportSolver solver(inst, weights);

  const int workers = std::max(
      1, std::min<int>(options.workers, static_cast<int>(order.size())));
  std::vector<Partial> parts(workers);
  const std::size_t chunk = (order.size() + workers - 1) / workers;
  auto run = [&](int w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(order.size(), lo + chunk);
    for (std::size_t k = lo; k < hi; ++k) solver.process(order[k], parts[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }

  SolutionCensus census{inst, weights, {}, {}, {}, {}, {}};
  std::map<std::vector<std::int64_t>, std::size_t> seen;
  for (auto& part : parts) {
    census.diagnostics.supports += part.diagnostics.supports;
    census.diagnostics.nonsingular_solutions +=
        part.diagnostics.nonsingular_solutions;
    census.diagnostics.singular_faces += part.diagnostics.singular_faces;
    census.diagnostics.infeasible += part.diagnostics.infeasible;
    for (auto& x : part.candidates) {
      auto key = dedup_key(x);
      if (seen.emplace(std::move(key), census.solutions.size()).second) {
        census.solutions.emplace_back(inst, std::move(x));
      }
    }
  }

  census.max_sol = best_of(census.solutions, weights,
                           [](std::size_t) { return true; });
  census.max_ics = best_of(census.solutions, weights,
                           [&](std::size_t k) { return census.is_ics(k); });
  for (const auto& s : census.solutions) {
    if (is_binary(s, inst.tol())) census.integer_solutions.push_back(s.support());
  }
  return census;
}

CensusWitness max_sol(const LcpInstance& inst, std::span<const double> weights,
                      int cap) {
  CensusOptions options;
  options.weights.assign(weights.begin(), weights.end());
  options.cap = cap;
  const SolutionCensus census = enumerate_solutions(inst, options);
  return {census.max_sol->value, census.max_sol_witness()};
}

std::optional<CensusWitness> max_ics(const LcpInstance& inst, int cap) {
  CensusOptions options;
  options.cap = cap;
  const SolutionCensus census = enumerate_solutions(inst, options);
  if (!census.max_ics) return std::nullopt;
  return CensusWitness{census.max_ics->value, census.max_ics_witness()};
}

std::vector<VertexSet> integer_solutions(const LcpInstance& inst, int cap) {
  check_census_cap(inst, cap);
  std::vector<VertexSet> out;
  for (std::uint32_t mask : census_support_order(inst.size())) {
    VertexSet s = VertexSet::FromMask(mask);
    if (check_integer_characterization(inst, s)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace glcp
