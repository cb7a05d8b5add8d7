#include "graphonlab/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <regex>

#include "graphonlab/error.hpp"

namespace graphonlab {

namespace {

template <class Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
  if (a.is_exact() && b.is_exact()) {
    return Scalar(mpq_class(op(a.exact(), b.exact())));
  }
  return Scalar(op(a.to_double(), b.to_double()));
}

}  // namespace

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(Errc::ParseError, "zero denominator");
  return Scalar(mpq_class(numerator, denominator));
}

Scalar Scalar::parse(std::string_view text) {
  static const std::regex kRational(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  static const std::regex kDecimal(R"(\s*[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\s*)");
  const std::string s(text);
  std::smatch match;
  if (std::regex_match(s, match, kRational)) {
    mpz_class num(match[1].str());
    mpz_class den(1);
    if (match[2].matched) den = mpz_class(match[2].str());
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
    return Scalar(mpq_class(num, den));
  }
  if (std::regex_match(s, kDecimal)) {
    return Scalar(std::stod(s));
  }
  throw Error(Errc::ParseError, "not a number: '" + s + "'");
}

const mpq_class& Scalar::exact() const {
  if (!is_exact()) throw std::logic_error("Scalar::exact() on a floating value");
  return std::get<mpq_class>(value_);
}

double Scalar::to_double() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_d();
  return std::get<double>(value_);
}

std::string Scalar::str() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_str();
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(value_));
  return buf;
}

bool Scalar::is_zero() const {
  if (is_exact()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<double>(value_) == 0.0;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  return *this = combine(*this, rhs, [](const auto& a, const auto& b) { return a + b; });
}
Scalar& Scalar::operator-=(const Scalar& rhs) {
  return *this = combine(*this, rhs, [](const auto& a, const auto& b) { return a - b; });
}
Scalar& Scalar::operator*=(const Scalar& rhs) {
  return *this = combine(*this, rhs, [](const auto& a, const auto& b) { return a * b; });
}
Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Scalar division by zero");
  return *this = combine(*this, rhs, [](const auto& a, const auto& b) { return a / b; });
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-exact()));
  return Scalar(-to_double());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return a.to_double() == b.to_double();
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() < b.exact();
  return a.to_double() < b.to_double();
}

Scalar abs(const Scalar& x) { return x < Scalar(0) ? -x : x; }

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar result = base.is_exact() ? Scalar(1) : Scalar(1.0);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

Scalar to_floating(const Scalar& x) { return Scalar(x.to_double()); }

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

}  // namespace graphonlab
