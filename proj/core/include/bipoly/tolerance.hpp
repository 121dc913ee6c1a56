#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bipoly {

/// Mixed absolute/relative comparison threshold.
///
/// Two reals are considered equal when |x - y| <= max(abs_eps, rel_eps * max(|x|, |y|)).
/// The predicate is symmetric and reflexive; it is not transitive.
class Tolerance {
 public:
  Tolerance() = default;
  Tolerance(double abs_eps, double rel_eps) : abs_eps_(abs_eps), rel_eps_(rel_eps) {
    if (!(abs_eps > 0.0) || !(rel_eps > 0.0)) {
      throw std::invalid_argument("Tolerance: abs_eps and rel_eps must be positive");
    }
  }
  explicit Tolerance(double eps) : Tolerance(eps, eps) {}

  double abs_eps() const { return abs_eps_; }
  double rel_eps() const { return rel_eps_; }

  double threshold(double x, double y) const {
    return std::max(abs_eps_, rel_eps_ * std::max(std::abs(x), std::abs(y)));
  }
  bool close(double x, double y) const { return std::abs(x - y) <= threshold(x, y); }
  bool is_zero(double x) const { return std::abs(x) <= abs_eps_; }
  /// x < y by more than the threshold.
  bool definitely_less(double x, double y) const { return y - x > threshold(x, y); }

 private:
  double abs_eps_ = 1e-9;
  double rel_eps_ = 1e-9;
};

}  // namespace bipoly
