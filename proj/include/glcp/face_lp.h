#pragma once

#include <vector>

#include <Eigen/Dense>

namespace glcp {

/// maximize objective'y  s.t.  eq y = eq_rhs,  ge y >= ge_rhs,  y >= 0.
struct LinearProgram {
  Eigen::MatrixXd eq;
  Eigen::VectorXd eq_rhs;
  Eigen::MatrixXd ge;
  Eigen::VectorXd ge_rhs;
  Eigen::VectorXd objective;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Eigen::VectorXd solution;
  double value = 0.0;
  /// Every basic feasible solution visited in phase two, in pivot order,
  /// starting with the phase-one end point.
  std::vector<Eigen::VectorXd> vertices;
};

/// Dense two-phase tableau simplex with Bland's rule. Redundant equality rows
/// (rank-deficient systems) are detected after phase one and dropped. Sized
/// for the tiny systems of the solution census, not for general use.
LpResult maximize(const LinearProgram& lp, double tol = 1e-9);

}  // namespace glcp
