#pragma once

#include "bipoly/rational.hpp"

#include "json.hpp"

#include <cstdint>
#include <ostream>
#include <string>

namespace bipoly {

/// The golden number used throughout this library is the *small* one,
///
///     phi = (sqrt(5) - 1) / 2 = 0.6180339887...,  the positive root of phi^2 = 1 - phi.
///
/// It is NOT the conjugate 1.618...; note 1/phi = 1 + phi. Every GoldenNumber
/// a + b*phi is stored with rational a, b and products reduce via phi^2 = 1 - phi,
/// so the representation is unique.
inline constexpr double kPhi = 0.61803398874989484820458683436563811772;

class GoldenNumber {
 public:
  GoldenNumber() = default;
  GoldenNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
  GoldenNumber(long long a, long long b) : a_(a), b_(b) {}

  static GoldenNumber phi() { return {0, 1}; }
  static GoldenNumber one() { return {1, 0}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  /// Galois conjugate: phi -> -1 - phi.
  GoldenNumber conjugate() const { return {a_ - b_, -b_}; }
  /// Field norm x * conj(x) = a^2 - ab - b^2.
  Rational norm() const { return a_ * a_ - a_ * b_ - b_ * b_; }

  double to_double() const;

  GoldenNumber& operator+=(const GoldenNumber& o);
  GoldenNumber& operator-=(const GoldenNumber& o);
  GoldenNumber& operator*=(const GoldenNumber& o);
  /// Throws std::domain_error on division by zero.
  GoldenNumber& operator/=(const GoldenNumber& o);

  friend GoldenNumber operator+(GoldenNumber x, const GoldenNumber& y) { return x += y; }
  friend GoldenNumber operator-(GoldenNumber x, const GoldenNumber& y) { return x -= y; }
  friend GoldenNumber operator*(GoldenNumber x, const GoldenNumber& y) { return x *= y; }
  friend GoldenNumber operator/(GoldenNumber x, const GoldenNumber& y) { return x /= y; }
  friend GoldenNumber operator-(const GoldenNumber& x) { return {-x.a_, -x.b_}; }
  friend bool operator==(const GoldenNumber& x, const GoldenNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// e.g. "35 - 55phi"
  std::string str() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const GoldenNumber& x);

GoldenNumber golden_mul(const GoldenNumber& x, const GoldenNumber& y);
GoldenNumber golden_pow(const GoldenNumber& x, std::uint64_t n);

/// Fibonacci numbers with F_0 = F_1 = 1.
Integer fibonacci(std::uint64_t n);

/// {"a": "p/q", "b": "r/s"}
nlohmann::json to_json(const GoldenNumber& x);
GoldenNumber golden_from_json(const nlohmann::json& j);

}  // namespace bipoly
