#include "glcp/face_lp.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace glcp {
namespace {

constexpr int kMaxPivots = 50000;

// Row-major tableau B^{-1}[A | b] with an explicit basis.
class Tableau {
 public:
  Tableau(Eigen::MatrixXd t, std::vector<int> basis, double tol)
      : t_(std::move(t)), basis_(std::move(basis)), tol_(tol) {}

  int rows() const { return static_cast<int>(t_.rows()); }
  int cols() const { return static_cast<int>(t_.cols()) - 1; }
  double rhs(int r) const { return t_(r, cols()); }
  double at(int r, int c) const { return t_(r, c); }
  const std::vector<int>& basis() const { return basis_; }

  void pivot(int r, int c) {
    t_.row(r) /= t_(r, c);
    for (int i = 0; i < rows(); ++i) {
      if (i != r && t_(i, c) != 0.0) t_.row(i) -= t_(i, c) * t_.row(r);
    }
    basis_[r] = c;
  }

  void drop_row(int r) {
    Eigen::MatrixXd next(t_.rows() - 1, t_.cols());
    for (int i = 0, k = 0; i < rows(); ++i) {
      if (i != r) next.row(k++) = t_.row(i);
    }
    t_ = std::move(next);
    basis_.erase(basis_.begin() + r);
  }

  Eigen::VectorXd point(int n) const {
    Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
    for (int r = 0; r < rows(); ++r) {
      if (basis_[r] < n) z(basis_[r]) = std::max(0.0, rhs(r));
    }
    return z;
  }

  // Maximizes cost'z over columns [0, usable). Returns kOptimal, kUnbounded
  // or kIterationLimit. Calls on_vertex after every pivot.
  template <typename OnVertex>
  LpStatus optimize(const Eigen::VectorXd& cost, int usable,
                    OnVertex&& on_vertex) {
    for (int iter = 0; iter < kMaxPivots; ++iter) {
      int entering = -1;
      for (int c = 0; c < usable; ++c) {
        if (is_basic(c)) continue;
        double reduced = cost(c);
        for (int r = 0; r < rows(); ++r) reduced -= cost(basis_[r]) * t_(r, c);
        if (reduced > tol_) {
          entering = c;
          break;
        }
      }
      if (entering < 0) return LpStatus::kOptimal;

      int leaving = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int r = 0; r < rows(); ++r) {
        const double a = t_(r, entering);
        if (a <= tol_) continue;
        const double ratio = std::max(0.0, rhs(r)) / a;
        if (ratio < best_ratio - tol_ ||
            (std::abs(ratio - best_ratio) <= tol_ && leaving >= 0 &&
             basis_[r] < basis_[leaving])) {
          best_ratio = ratio;
          leaving = r;
        }
      }
      if (leaving < 0) return LpStatus::kUnbounded;
      pivot(leaving, entering);
      on_vertex();
    }
    return LpStatus::kIterationLimit;
  }

 private:
  bool is_basic(int c) const {
    for (int b : basis_) {
      if (b == c) return true;
    }
    return false;
  }

  Eigen::MatrixXd t_;
  std::vector<int> basis_;
  double tol_;
};

}  // namespace

LpResult maximize(const LinearProgram& lp, double tol) {
  const int n = static_cast<int>(lp.objective.size());
  const int m_eq = static_cast<int>(lp.eq.rows());
  const int m_ge = static_cast<int>(lp.ge.rows());
  if ((m_eq > 0 && lp.eq.cols() != n) || (m_ge > 0 && lp.ge.cols() != n) ||
      lp.eq_rhs.size() != m_eq || lp.ge_rhs.size() != m_ge) {
    throw std::invalid_argument("maximize: inconsistent LP dimensions");
  }
  const int m = m_eq + m_ge;
  // Columns: [y (n) | surplus (m_ge) | artificial (m) | rhs].
  const int n_struct = n + m_ge;
  const int n_cols = n_struct + m;
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, n_cols + 1);
  for (int r = 0; r < m_eq; ++r) {
    t.row(r).head(n) = lp.eq.row(r);
    t(r, n_cols) = lp.eq_rhs(r);
  }
  for (int r = 0; r < m_ge; ++r) {
    t.row(m_eq + r).head(n) = lp.ge.row(r);
    t(m_eq + r, n + r) = -1.0;
    t(m_eq + r, n_cols) = lp.ge_rhs(r);
  }
  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) {
    if (t(r, n_cols) < 0.0) t.row(r) *= -1.0;
    t(r, n_struct + r) = 1.0;
    basis[r] = n_struct + r;
  }

  Tableau tab(std::move(t), std::move(basis), tol);
  LpResult result;

  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n_cols);
  phase1.tail(m).setConstant(-1.0);
  const LpStatus s1 = tab.optimize(phase1, n_cols, [] {});
  if (s1 == LpStatus::kIterationLimit) {
    result.status = s1;
    return result;
  }
  double infeasibility = 0.0;
  for (int r = 0; r < tab.rows(); ++r) {
    if (tab.basis()[r] >= n_struct) infeasibility += std::abs(tab.rhs(r));
  }
  if (infeasibility > tol * (1.0 + m)) {
    result.status = LpStatus::kInfeasible;
    return result;
  }

  // Drive zero-level artificials out of the basis; rows where that is
  // impossible are linear combinations of the others.
  for (int r = tab.rows() - 1; r >= 0; --r) {
    if (tab.basis()[r] < n_struct) continue;
    int col = -1;
    for (int c = 0; c < n_struct; ++c) {
      if (std::abs(tab.at(r, c)) > tol) {
        col = c;
        break;
      }
    }
    if (col >= 0) {
      tab.pivot(r, col);
    } else {
      tab.drop_row(r);
    }
  }

  Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(n_cols);
  phase2.head(n) = lp.objective;
  result.vertices.push_back(tab.point(n));
  const LpStatus s2 = tab.optimize(phase2, n_struct, [&] {
    result.vertices.push_back(tab.point(n));
  });
  result.status = s2;
  if (s2 == LpStatus::kOptimal) {
    result.solution = tab.point(n);
    result.value = lp.objective.dot(result.solution);
  }
  return result;
}

}  // namespace glcp
