#include <cmath>
#include <numbers>

#include "bipoly/reflection_group.hpp"
#include "doctest.h"

using namespace bipoly;

TEST_CASE("group orders") {
  CHECK(group_elements(parse_group("A3")).size() == 24);
  CHECK(group_elements(parse_group("B3")).size() == 48);
  CHECK(group_elements(parse_group("H3")).size() == 120);
  CHECK(group_elements(parse_group("I2(5)")).size() == 10);
  CHECK(group_elements(parse_group("I1+I2(4)")).size() == 16);
  CHECK(group_elements(parse_group("I1+I1+I1")).size() == 8);
}

TEST_CASE("simple roots realise the Coxeter matrix") {
  for (const char* name : {"A3", "B3", "H3", "I1+I2(6)"}) {
    const auto g = parse_group(name);
    for (int i = 0; i < g.rank; ++i) {
      for (int j = 0; j < g.rank; ++j) {
        const double expected = -std::cos(std::numbers::pi / g.coxeter(i, j));
        CHECK(g.roots[i].dot(g.roots[j]) == doctest::Approx(expected).epsilon(1e-12));
        // (s_i s_j)^m = 1
        Eigen::MatrixXd prod = reflection(g.roots[i]) * reflection(g.roots[j]);
        Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(g.rank, g.rank);
        for (int k = 0; k < g.coxeter(i, j); ++k) acc = acc * prod;
        CHECK((acc - Eigen::MatrixXd::Identity(g.rank, g.rank)).norm() < 1e-9);
      }
    }
  }
}

TEST_CASE("elements are orthogonal and distinct; the default seed is generic") {
  const auto g = parse_group("B3");
  const auto els = group_elements(g);
  CHECK((els.front() - Eigen::MatrixXd::Identity(3, 3)).norm() == 0.0);
  for (const auto& m : els) CHECK((m * m.transpose() - Eigen::MatrixXd::Identity(3, 3)).norm() < 1e-9);
  const Point s = default_seed(g);
  for (const auto& r : g.roots) CHECK(r.dot(s) == doctest::Approx(1.0));
}

TEST_CASE("bad names and the size cap") {
  CHECK_THROWS_AS(parse_group("E8"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("I2(1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("A3+"), std::invalid_argument);
  CHECK_THROWS_AS(group_elements(parse_group("H3"), 100), GroupTooLargeError);
}
