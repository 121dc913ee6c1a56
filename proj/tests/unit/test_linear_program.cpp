#include <random>

#include "bipoly/linear_program.hpp"
#include "doctest.h"

using namespace bipoly;

TEST_CASE("small LP with a known optimum") {
  // max x + y s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
  Eigen::MatrixXd A(2, 4);
  A << 1, 2, 1, 0, 3, 1, 0, 1;
  Eigen::VectorXd b(2), c(4);
  b << 4, 6;
  c << 1, 1, 0, 0;
  const auto s = maximize(A, b, c);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.objective == doctest::Approx(2.8));
  CHECK(s.x(0) == doctest::Approx(1.6));
  CHECK(s.x(1) == doctest::Approx(1.2));
}

TEST_CASE("infeasible and unbounded problems are reported") {
  Eigen::MatrixXd A(1, 2);
  A << 1, 1;
  Eigen::VectorXd b(1), c(2);
  b << -1;
  c << 1, 0;
  CHECK(maximize(A, b, c).status == LpStatus::kInfeasible);
  CHECK_FALSE(is_feasible(A, b));
  A << 1, -1;
  b << 0;
  CHECK(maximize(A, b, c).status == LpStatus::kUnbounded);
}

TEST_CASE("shape mismatch throws") {
  CHECK_THROWS_AS(maximize(Eigen::MatrixXd::Ones(2, 3), Eigen::VectorXd::Ones(3), Eigen::VectorXd::Ones(3)), LpError);
}

TEST_CASE("feasibility agrees with a constructed witness") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::MatrixXd A(3, 7);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 7; ++j) A(i, j) = u(rng);
    Eigen::VectorXd x(7);
    for (int j = 0; j < 7; ++j) x(j) = std::abs(u(rng));
    CHECK(is_feasible(A, A * x));
    // all-positive rows with a negative right-hand side cannot be met by x >= 0
    CHECK_FALSE(is_feasible(A.cwiseAbs(), -Eigen::VectorXd::Ones(3)));
  }
}
