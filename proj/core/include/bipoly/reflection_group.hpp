#pragma once

#include "bipoly/polytope.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace bipoly {

class GroupTooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite reflection group given by its simple roots.
///
/// Supported names: I1, I2(k) for k >= 2, A3, B3, H3, and direct sums joined
/// with '+', e.g. "I1+I2(3)". Components act on orthogonal coordinate blocks.
struct GroupDescriptor {
  std::string name;
  int rank = 0;
  std::vector<Point> roots;       // unit simple roots, one per generator
  Eigen::MatrixXi coxeter;        // m_ij, with 1 on the diagonal
};

/// Throws std::invalid_argument on an unknown or malformed name.
GroupDescriptor parse_group(const std::string& name);

/// Reflection matrix I - 2 a a^T for a unit root a.
Eigen::MatrixXd reflection(const Point& root);

inline constexpr std::size_t kGroupCap = 10000;

/// All elements, identity first, in breadth-first order over the simple
/// reflections. Throws GroupTooLargeError beyond `cap` elements.
std::vector<Eigen::MatrixXd> group_elements(const GroupDescriptor& g, std::size_t cap = kGroupCap);

/// The point with <seed, a_i> = 1 for every simple root: equidistant from all
/// mirrors and inside the fundamental chamber.
Point default_seed(const GroupDescriptor& g);

}  // namespace bipoly
