#include "bipoly/golden.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bipoly {

double GoldenNumber::to_double() const {
  const double direct = bipoly::to_double(a_) + bipoly::to_double(b_) * kPhi;
  const double conj = bipoly::to_double(a_ - b_) - bipoly::to_double(b_) * kPhi;
  // a + b phi = norm / conjugate avoids cancellation when |a|, |b| are large
  if (std::abs(conj) > std::abs(direct) && conj != 0.0) return bipoly::to_double(norm()) / conj;
  return direct;
}

GoldenNumber& GoldenNumber::operator+=(const GoldenNumber& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

GoldenNumber& GoldenNumber::operator-=(const GoldenNumber& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

GoldenNumber& GoldenNumber::operator*=(const GoldenNumber& o) {
  // (a + b phi)(c + d phi) = ac + bd + (ad + bc - bd) phi, using phi^2 = 1 - phi
  const Rational bd = b_ * o.b_;
  Rational a = a_ * o.a_ + bd;
  Rational b = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

GoldenNumber& GoldenNumber::operator/=(const GoldenNumber& o) {
  const Rational n = o.norm();
  if (n == 0) throw std::domain_error("GoldenNumber: division by zero");
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

std::string GoldenNumber::str() const {
  std::ostringstream os;
  auto fmt = [](const Rational& q) {
    return boost::multiprecision::denominator(q) == 1 ? boost::multiprecision::numerator(q).str()
                                                       : to_string(q);
  };
  if (b_ == 0) return fmt(a_);
  if (a_ != 0) os << fmt(a_) << (b_ < 0 ? " - " : " + ");
  else if (b_ < 0) os << "-";
  const Rational mag = b_ < 0 ? Rational(-b_) : b_;
  if (mag != 1) os << fmt(mag);
  os << "phi";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GoldenNumber& x) { return os << x.str(); }

GoldenNumber golden_mul(const GoldenNumber& x, const GoldenNumber& y) { return x * y; }

GoldenNumber golden_pow(const GoldenNumber& x, std::uint64_t n) {
  GoldenNumber result = GoldenNumber::one();
  GoldenNumber base = x;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Integer fibonacci(std::uint64_t n) {
  Integer prev = 1, cur = 1;
  for (std::uint64_t i = 1; i < n; ++i) {
    Integer next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

nlohmann::json to_json(const GoldenNumber& x) {
  return {{"a", to_string(x.a())}, {"b", to_string(x.b())}};
}

GoldenNumber golden_from_json(const nlohmann::json& j) {
  return {parse_rational(j.at("a").get<std::string>()), parse_rational(j.at("b").get<std::string>())};
}

}  // namespace bipoly
