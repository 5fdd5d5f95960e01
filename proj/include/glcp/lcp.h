#pragma once

#include <span>
#include <string>
#include <vector>

#include "glcp/graph.h"

namespace glcp {

inline constexpr double kDefaultTolerance = 1e-9;

/// LCP(I + delta*A, -e) on a graph: find x >= 0 with C(x) = (I + delta*A)x
/// >= 1 componentwise and x_i (C_i(x) - 1) = 0.
class LcpInstance {
 public:
  /// Throws std::invalid_argument unless delta > 0 and tol >= 0 (both finite).
  LcpInstance(Graph graph, double delta, double tol = kDefaultTolerance);

  const Graph& graph() const { return graph_; }
  double delta() const { return delta_; }
  double tol() const { return tol_; }
  int size() const { return graph_.num_vertices(); }

  /// ceil(1/delta): the domination order forced on every solution support.
  int domination_order() const;

  LcpInstance with_delta(double delta) const {
    return LcpInstance(graph_, delta, tol_);
  }

 private:
  Graph graph_;
  double delta_;
  double tol_;
};

/// C_i(x) = x_i + delta * sum over neighbors j of x_j.
std::vector<double> discounted_closed_neighborhood(const LcpInstance& inst,
                                                   std::span<const double> x);

/// A vertex-indexed vector together with its support (entries > tol),
/// C(x), and l1 norm. Not necessarily a solution.
class SolutionVector {
 public:
  SolutionVector(const LcpInstance& inst, std::vector<double> x);

  const std::vector<double>& x() const { return x_; }
  const VertexSet& support() const { return support_; }
  const std::vector<double>& c_of_x() const { return c_; }
  double l1() const { return l1_; }
  double delta() const { return delta_; }
  double weighted_l1(std::span<const double> weights) const;

  friend bool operator==(const SolutionVector&, const SolutionVector&) = default;

 private:
  double delta_;
  std::vector<double> x_;
  VertexSet support_;
  std::vector<double> c_;
  double l1_;
};

enum class Condition { kNonnegativity, kFeasibility, kComplementarity };

std::string to_string(Condition c);

struct Violation {
  Vertex vertex;
  Condition condition;
  /// x_i for nonnegativity, C_i(x) - 1 for feasibility, x_i (C_i(x) - 1) for
  /// complementarity.
  double residual;
};

struct Verdict {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks x_i >= -tol, C_i(x) >= 1 - tol and |x_i (C_i(x) - 1)| <= tol at
/// every vertex and reports every failure. Throws std::invalid_argument on a
/// dimension mismatch or non-finite entry.
Verdict verify_solution(const LcpInstance& inst, std::span<const double> x);

/// Binary x (within tol) is a solution. Throws std::invalid_argument when x
/// is not binary.
bool is_integer_solution(const LcpInstance& inst, std::span<const double> x);

/// s is a ceil(1/delta)-dominating independent set.
bool check_integer_characterization(const LcpInstance& inst,
                                    const VertexSet& s);

/// phi(x) = e'x - x'(I + delta*A)x / 2. Throws for entries below -tol.
double potential(const LcpInstance& inst, std::span<const double> x);

/// KKT conditions of max phi(x) s.t. x >= 0, via the gradient of phi:
/// mu = (I + delta*A)x - e >= 0 and x_i mu_i = 0 within tol.
bool is_stationary_point(const LcpInstance& inst, std::span<const double> x);

}  // namespace glcp
