#include <cmath>
#include <numbers>
#include <random>

#include "bipoly/appendix.hpp"
#include "doctest.h"

using namespace bipoly;

namespace {
constexpr double kPi = std::numbers::pi;

// spherical law of cosines: dihedral at edge 1 from the face angles around a vertex
double dihedral_oracle(double a12, double a23, double a31) {
  return std::acos((std::cos(a23) - std::cos(a12) * std::cos(a31)) / (std::sin(a12) * std::sin(a31)));
}
}  // namespace

TEST_CASE("sum-to-zero coefficients of a simplex frame") {
  // vertices of a regular triangle centred at 0: equal coefficients
  std::vector<Point> xs;
  for (int i = 0; i < 3; ++i) xs.emplace_back(Point(Eigen::Vector2d(std::cos(2 * kPi * i / 3), std::sin(2 * kPi * i / 3))));
  const auto c = sum_to_zero_coefficients(xs);
  CHECK(c[0] == doctest::Approx(c[1]));
  CHECK(c[1] == doctest::Approx(c[2]));
  CHECK(c[0] > 0);
}

TEST_CASE("sum-to-zero rejects invalid input") {
  std::vector<Point> xs{Point(Eigen::Vector2d(1, 0)), Point(Eigen::Vector2d(0, 1)), Point(Eigen::Vector2d(-1, -1))};
  CHECK_THROWS_AS(sum_to_zero_coefficients(xs), std::invalid_argument);
  CHECK_THROWS_AS(sum_to_zero_coefficients({Point(Eigen::Vector2d(1, 0))}), std::invalid_argument);
}

TEST_CASE("cube corner: right angles give right dihedrals") {
  const auto e = dihedral_from_interior_angles({kPi / 2, kPi / 2, kPi / 2});
  for (double x : e) CHECK(x == doctest::Approx(kPi / 2));
}

TEST_CASE("dihedrals agree with the spherical law of cosines and invert") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(0.3, 2.0);
  int tested = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const FaceAngles a{u(rng), u(rng), u(rng)};
    EdgeDihedrals e;
    try {
      e = dihedral_from_interior_angles(a);
    } catch (const std::domain_error&) {
      // not realizable: the triangle inequality or the 2pi bound fails
      CHECK((a[0] + a[1] + a[2] >= 2 * kPi - 1e-6 || a[0] >= a[1] + a[2] - 1e-6 || a[1] >= a[0] + a[2] - 1e-6 ||
             a[2] >= a[0] + a[1] - 1e-6));
      continue;
    }
    ++tested;
    CHECK(e[0] == doctest::Approx(dihedral_oracle(a[0], a[1], a[2])).epsilon(1e-9));
    CHECK(e[1] == doctest::Approx(dihedral_oracle(a[1], a[2], a[0])).epsilon(1e-9));
    CHECK(e[2] == doctest::Approx(dihedral_oracle(a[2], a[0], a[1])).epsilon(1e-9));
    const FaceAngles back = interior_angles_from_dihedral(e);
    for (int i = 0; i < 3; ++i) CHECK(back[i] == doctest::Approx(a[i]).epsilon(1e-8));
  }
  CHECK(tested > 50);
}
