#include "glcp/lcp.h"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace glcp {
namespace {

void check_dimension(const LcpInstance& inst, std::span<const double> x) {
  if (static_cast<int>(x.size()) != inst.size()) {
    throw std::invalid_argument("vector has " + std::to_string(x.size()) +
                                " entries, graph has " +
                                std::to_string(inst.size()) + " vertices");
  }
  for (double v : x) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("vector contains a non-finite entry");
    }
  }
}

}  // namespace

LcpInstance::LcpInstance(Graph graph, double delta, double tol)
    : graph_(std::move(graph)), delta_(delta), tol_(tol) {
  if (!std::isfinite(delta) || delta <= 0.0) {
    throw std::invalid_argument("delta must be a positive real");
  }
  if (!std::isfinite(tol) || tol < 0.0) {
    throw std::invalid_argument("tolerance must be nonnegative");
  }
}

int LcpInstance::domination_order() const {
  return static_cast<int>(std::ceil(1.0 / delta_));
}

std::vector<double> discounted_closed_neighborhood(const LcpInstance& inst,
                                                   std::span<const double> x) {
  check_dimension(inst, x);
  const Graph& g = inst.graph();
  std::vector<double> c(x.size());
  for (Vertex i = 1; i <= g.num_vertices(); ++i) {
    double sum = 0.0;
    for (Vertex j : g.neighbors(i)) sum += x[j - 1];
    c[i - 1] = x[i - 1] + inst.delta() * sum;
  }
  return c;
}

SolutionVector::SolutionVector(const LcpInstance& inst, std::vector<double> x)
    : delta_(inst.delta()), x_(std::move(x)) {
  c_ = discounted_closed_neighborhood(inst, x_);
  std::vector<Vertex> support;
  l1_ = 0.0;
  for (std::size_t k = 0; k < x_.size(); ++k) {
    if (x_[k] > inst.tol()) support.push_back(static_cast<Vertex>(k) + 1);
    l1_ += x_[k];
  }
  support_ = VertexSet(std::move(support));
}

double SolutionVector::weighted_l1(std::span<const double> weights) const {
  if (weights.size() != x_.size()) {
    throw std::invalid_argument("weight vector has the wrong dimension");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < x_.size(); ++k) sum += weights[k] * x_[k];
  return sum;
}

std::string to_string(Condition c) {
  switch (c) {
    case Condition::kNonnegativity:
      return "nonnegativity";
    case Condition::kFeasibility:
      return "feasibility";
    case Condition::kComplementarity:
      return "complementarity";
  }
  return "unknown";
}

Verdict verify_solution(const LcpInstance& inst, std::span<const double> x) {
  const std::vector<double> c = discounted_closed_neighborhood(inst, x);
  const double tol = inst.tol();
  Verdict verdict;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const Vertex v = static_cast<Vertex>(k) + 1;
    if (x[k] < -tol) {
      verdict.violations.push_back({v, Condition::kNonnegativity, x[k]});
    }
    if (c[k] < 1.0 - tol) {
      verdict.violations.push_back({v, Condition::kFeasibility, c[k] - 1.0});
    }
    const double comp = x[k] * (c[k] - 1.0);
    if (std::abs(comp) > tol) {
      verdict.violations.push_back({v, Condition::kComplementarity, comp});
    }
  }
  return verdict;
}

bool is_integer_solution(const LcpInstance& inst, std::span<const double> x) {
  check_dimension(inst, x);
  for (double v : x) {
    if (std::abs(v) > inst.tol() && std::abs(v - 1.0) > inst.tol()) {
      throw std::invalid_argument("is_integer_solution: vector is not binary");
    }
  }
  return verify_solution(inst, x).valid();
}

bool check_integer_characterization(const LcpInstance& inst,
                                    const VertexSet& s) {
  return is_independent_set(inst.graph(), s) &&
         is_k_dominating(inst.graph(), s, inst.domination_order());
}

namespace {

Eigen::MatrixXd lcp_matrix(const LcpInstance& inst) {
  const int n = inst.size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (auto [u, v] : inst.graph().edges()) {
    m(u - 1, v - 1) = inst.delta();
    m(v - 1, u - 1) = inst.delta();
  }
  return m;
}

void check_nonnegative(const LcpInstance& inst, std::span<const double> x) {
  check_dimension(inst, x);
  for (double v : x) {
    if (v < -inst.tol()) {
      throw std::invalid_argument("potential is defined on x >= 0 only");
    }
  }
}

}  // namespace

double potential(const LcpInstance& inst, std::span<const double> x) {
  check_nonnegative(inst, x);
  const Eigen::Map<const Eigen::VectorXd> v(x.data(),
                                            static_cast<Eigen::Index>(x.size()));
  return v.sum() - 0.5 * v.dot(lcp_matrix(inst) * v);
}

bool is_stationary_point(const LcpInstance& inst, std::span<const double> x) {
  check_nonnegative(inst, x);
  const Eigen::Map<const Eigen::VectorXd> v(x.data(),
                                            static_cast<Eigen::Index>(x.size()));
  const Eigen::VectorXd gradient =
      Eigen::VectorXd::Ones(v.size()) - lcp_matrix(inst) * v;
  const Eigen::VectorXd mu = -gradient;
  const double tol = inst.tol();
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (mu(k) < -tol) return false;
    if (std::abs(v(k) * mu(k)) > tol) return false;
  }
  return true;
}

}  // namespace glcp
