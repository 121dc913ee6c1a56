#include "bipoly/appendix.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bipoly {
namespace {

std::vector<double> solve_recursive(const std::vector<Eigen::VectorXd>& xs) {
  const auto d = xs.front().size();
  if (d == 1) return {std::abs(xs[1](0)), std::abs(xs[0](0))};

  const Eigen::VectorXd x0 = xs[0];
  const double n0 = x0.squaredNorm();
  // orthonormal basis of x0's complement: trailing columns of a QR factor
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(x0);
  const Eigen::MatrixXd Q = qr.householderQ();
  const Eigen::MatrixXd basis = Q.rightCols(d - 1);

  std::vector<Eigen::VectorXd> projected;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const Eigen::VectorXd p = xs[i] - x0 * (x0.dot(xs[i]) / n0);
    projected.emplace_back(basis.transpose() * p);
  }
  std::vector<double> tail = solve_recursive(projected);

  Eigen::VectorXd combo = Eigen::VectorXd::Zero(d);
  for (std::size_t i = 1; i < xs.size(); ++i) combo += tail[i - 1] * xs[i];
  std::vector<double> out{-x0.dot(combo) / n0};
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

Eigen::Matrix3d unit_triple(double c12, double c23, double c31) {
  // columns x1, x2, x3 with <x1,x2> = c12, <x2,x3> = c23, <x3,x1> = c31
  const double s12 = std::sqrt(1.0 - c12 * c12);
  const double y = (c23 - c31 * c12) / s12;
  const double z2 = 1.0 - c31 * c31 - y * y;
  if (!(z2 > 1e-15)) throw std::domain_error("angle triple is not realizable at a convex vertex");
  Eigen::Matrix3d m;
  m.col(0) << 1.0, 0.0, 0.0;
  m.col(1) << c12, s12, 0.0;
  m.col(2) << c31, y, std::sqrt(z2);
  return m;
}

void check_angles(const std::array<double, 3>& a) {
  for (double x : a) {
    if (!(x > 0.0 && x < std::numbers::pi)) throw std::domain_error("angles must lie in (0, pi)");
  }
}

double angle_between(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return std::acos(std::clamp(a.normalized().dot(b.normalized()), -1.0, 1.0));
}

}  // namespace

std::vector<double> sum_to_zero_coefficients(const std::vector<Point>& vectors) {
  if (vectors.size() < 2) throw std::invalid_argument("sum_to_zero: need d+1 >= 2 vectors");
  const auto d = vectors.front().size();
  if (static_cast<std::size_t>(d) + 1 != vectors.size()) {
    throw std::invalid_argument("sum_to_zero: expected exactly d+1 vectors in R^d");
  }
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != d) throw std::invalid_argument("sum_to_zero: mixed dimensions");
    if (vectors[i].norm() == 0.0) throw std::invalid_argument("sum_to_zero: zero vector");
    for (std::size_t j = 0; j < i; ++j) {
      if (!(vectors[i].dot(vectors[j]) < 0.0)) {
        throw std::invalid_argument("sum_to_zero: inner products must be pairwise negative");
      }
    }
  }
  std::vector<Eigen::VectorXd> xs(vectors.begin(), vectors.end());
  return solve_recursive(xs);
}

EdgeDihedrals dihedral_from_interior_angles(const FaceAngles& angles) {
  check_angles(angles);
  const Eigen::Matrix3d u = unit_triple(std::cos(angles[0]), std::cos(angles[1]), std::cos(angles[2]));
  const Eigen::Vector3d u1 = u.col(0), u2 = u.col(1), u3 = u.col(2);
  // outward normals: orthogonal to the face's two edges, pointing away from the third
  auto outward = [](const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& other) {
    Eigen::Vector3d n = a.cross(b);
    return n.dot(other) > 0 ? Eigen::Vector3d(-n) : n;
  };
  const Eigen::Vector3d n12 = outward(u1, u2, u3);
  const Eigen::Vector3d n23 = outward(u2, u3, u1);
  const Eigen::Vector3d n31 = outward(u3, u1, u2);
  const double pi = std::numbers::pi;
  return {pi - angle_between(n31, n12), pi - angle_between(n12, n23), pi - angle_between(n23, n31)};
}

FaceAngles interior_angles_from_dihedral(const EdgeDihedrals& dihedrals) {
  check_angles(dihedrals);
  const double pi = std::numbers::pi;
  // normals n12, n23, n31; consecutive ones meet at e2, e3, e1
  const Eigen::Matrix3d n = unit_triple(std::cos(pi - dihedrals[1]), std::cos(pi - dihedrals[2]),
                                        std::cos(pi - dihedrals[0]));
  const Eigen::Vector3d n12 = n.col(0), n23 = n.col(1), n31 = n.col(2);
  auto edge = [](const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& opposite) {
    Eigen::Vector3d e = a.cross(b);
    return e.dot(opposite) > 0 ? Eigen::Vector3d(-e) : e;
  };
  const Eigen::Vector3d u1 = edge(n31, n12, n23);
  const Eigen::Vector3d u2 = edge(n12, n23, n31);
  const Eigen::Vector3d u3 = edge(n23, n31, n12);
  return {angle_between(u1, u2), angle_between(u2, u3), angle_between(u3, u1)};
}

}  // namespace bipoly
