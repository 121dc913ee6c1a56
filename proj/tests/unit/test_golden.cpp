#include <cmath>
#include <random>

#include "bipoly/golden.hpp"
#include "doctest.h"

using namespace bipoly;

TEST_CASE("phi satisfies phi^2 = 1 - phi exactly") {
  const GoldenNumber phi = GoldenNumber::phi();
  CHECK(phi * phi == GoldenNumber::one() - phi);
  CHECK(GoldenNumber::one() / phi == GoldenNumber::one() + phi);
  CHECK(phi.to_double() == doctest::Approx(kPhi).epsilon(1e-15));
}

TEST_CASE("powers follow the Fibonacci recurrence") {
  // phi^n = (-1)^n (F_{n-2} - F_{n-1} phi) with F_0 = F_1 = 1; check against repeated multiplication
  GoldenNumber acc = GoldenNumber::one();
  for (std::uint64_t n = 0; n < 30; ++n) {
    CHECK(golden_pow(GoldenNumber::phi(), n) == acc);
    CHECK(golden_pow(GoldenNumber::phi(), n).to_double() == doctest::Approx(std::pow(kPhi, double(n))).epsilon(1e-12));
    acc *= GoldenNumber::phi();
  }
  CHECK(fibonacci(0) == 1);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(10) == 89);
  CHECK(fibonacci(90) == fibonacci(89) + fibonacci(88));
}

TEST_CASE("the near-miss identity holds with zero tolerance") {
  const GoldenNumber phi = GoldenNumber::phi();
  const GoldenNumber y = GoldenNumber(4, 0) * phi - GoldenNumber(3, 0);
  const GoldenNumber z = GoldenNumber(3, 0) * phi - GoldenNumber(1, 0);
  CHECK(y * y + z * z == GoldenNumber(35, -55));
  CHECK(GoldenNumber(35, -55) == GoldenNumber::one() + golden_pow(phi, 10));
  CHECK(GoldenNumber(35, -55).str() == "35 - 55phi");
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-20, 20), q(1, 9);
  for (int i = 0; i < 200; ++i) {
    const GoldenNumber x(Rational(d(rng), q(rng)), Rational(d(rng), q(rng)));
    const GoldenNumber y(Rational(d(rng), q(rng)), Rational(d(rng), q(rng)));
    const GoldenNumber w(Rational(d(rng), q(rng)), Rational(d(rng), q(rng)));
    CHECK(x * (y + w) == x * y + x * w);
    CHECK((x * y).to_double() == doctest::Approx(x.to_double() * y.to_double()).epsilon(1e-9));
    CHECK((x * y).norm() == x.norm() * y.norm());
    if (!(y == GoldenNumber())) CHECK((x / y) * y == x);
  }
}

TEST_CASE("division by zero throws; JSON round-trips") {
  CHECK_THROWS_AS(GoldenNumber::one() / GoldenNumber(), std::domain_error);
  const GoldenNumber x(Rational(-3, 7), Rational(5, 2));
  CHECK(golden_from_json(to_json(x)) == x);
}
