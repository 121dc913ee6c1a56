#pragma once

#include <Eigen/Dense>

#include <stdexcept>

namespace bipoly {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  Eigen::VectorXd x;
};

class LpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense two-phase simplex for   maximize c.x  subject to  A x = b,  x >= 0.
///
/// Intended for desk-scale problems (a handful of rows, a few hundred columns).
/// Pivoting follows Bland's rule, so degenerate problems terminate. Throws
/// LpError if the iteration cap is hit or the input shapes disagree.
LpSolution maximize(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                    double pivot_eps = 1e-11);

/// True iff {x >= 0 : A x = b} is nonempty.
bool is_feasible(const Eigen::MatrixXd& A, const Eigen::VectorXd& b);

}  // namespace bipoly
