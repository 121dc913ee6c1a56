#include "bipoly/linear_program.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace bipoly {
namespace {

constexpr int kMaxIterations = 100000;

class Tableau {
 public:
  Tableau(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, double eps)
      : m_(static_cast<int>(A.rows())), n_(static_cast<int>(A.cols())), eps_(eps) {
    // columns: n originals, m artificials, rhs
    t_ = Eigen::MatrixXd::Zero(m_ + 1, n_ + m_ + 1);
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      const double sign = b(i) < 0 ? -1.0 : 1.0;
      t_.row(i).head(n_) = sign * A.row(i);
      t_(i, n_ + i) = 1.0;
      t_(i, rhs()) = sign * b(i);
      basis_[i] = n_ + i;
    }
  }

  int rhs() const { return n_ + m_; }

  // Phase I: maximize -sum(artificials). Returns the optimal value (<= 0).
  double phase_one() {
    t_.row(m_).setZero();
    for (int i = 0; i < m_; ++i) t_.row(m_) -= t_.row(i);
    for (int i = 0; i < m_; ++i) t_(m_, n_ + i) = 0.0;
    run(n_ + m_);
    return t_(m_, rhs());
  }

  // Pivots basic artificials out where possible; rows that cannot be cleared are redundant.
  void expel_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (int j = 0; j < n_; ++j) {
        if (std::abs(t_(i, j)) > eps_) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  LpStatus phase_two(const Eigen::VectorXd& c) {
    t_.row(m_).setZero();
    t_.row(m_).head(n_) = -c.transpose();
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) t_.row(m_) += c(basis_[i]) * t_.row(i);
    }
    return run(n_);
  }

  double objective() const { return t_(m_, rhs()); }

  Eigen::VectorXd solution() const {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n_);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x(basis_[i]) = t_(i, rhs());
    }
    return x;
  }

 private:
  // Bland's rule over columns [0, allowed).
  LpStatus run(int allowed) {
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      int enter = -1;
      for (int j = 0; j < allowed; ++j) {
        if (t_(m_, j) < -eps_) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpStatus::kOptimal;

      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m_; ++i) {
        const double a = t_(i, enter);
        if (a <= eps_) continue;
        const double ratio = t_(i, rhs()) / a;
        if (ratio < best - eps_ || (std::abs(ratio - best) <= eps_ && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return LpStatus::kUnbounded;
      pivot(leave, enter);
    }
    throw LpError("simplex: iteration cap reached");
  }

  void pivot(int row, int col) {
    t_.row(row) /= t_(row, col);
    for (int i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const double f = t_(i, col);
      if (f != 0.0) t_.row(i) -= f * t_.row(row);
    }
    basis_[row] = col;
  }

  int m_;
  int n_;
  double eps_;
  Eigen::MatrixXd t_;
  std::vector<int> basis_;
};

}  // namespace

LpSolution maximize(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                    double pivot_eps) {
  if (A.rows() != b.size() || A.cols() != c.size()) {
    throw LpError("simplex: inconsistent problem dimensions");
  }
  Tableau tab(A, b, pivot_eps);
  const double scale = 1.0 + b.cwiseAbs().maxCoeff();
  LpSolution out;
  if (tab.phase_one() < -1e-9 * scale) {
    out.status = LpStatus::kInfeasible;
    return out;
  }
  tab.expel_artificials();
  out.status = tab.phase_two(c);
  if (out.status == LpStatus::kOptimal) {
    out.objective = tab.objective();
    out.x = tab.solution();
  }
  return out;
}

bool is_feasible(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
  return maximize(A, b, Eigen::VectorXd::Zero(A.cols())).status != LpStatus::kInfeasible;
}

}  // namespace bipoly
