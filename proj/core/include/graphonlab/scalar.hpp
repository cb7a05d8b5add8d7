#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace graphonlab {

/// A number that is either an exact rational or an IEEE double.
///
/// Arithmetic between two exact values stays exact; as soon as a floating
/// operand is involved the result is floating. This keeps the rational path
/// free of rounding so oracle comparisons can demand literal equality.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(long value) : value_(mpq_class(value)) {}  // NOLINT: integer literals are exact
  Scalar(int value) : value_(mpq_class(value)) {}   // NOLINT
  explicit Scalar(mpq_class value);
  explicit Scalar(double value) : value_(value) {}

  static Scalar rational(long numerator, long denominator);

  /// Parses "a/b", "a" (exact) or a decimal literal such as "0.25" (floating).
  /// Throws Error(ParseError) on anything else.
  static Scalar parse(std::string_view text);

  bool is_exact() const noexcept { return std::holds_alternative<mpq_class>(value_); }

  /// Precondition: is_exact().
  const mpq_class& exact() const;
  double to_double() const;

  /// "a/b" (or "a" for integers) when exact; 17 significant digits otherwise.
  std::string str() const;

  bool is_zero() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  /// Mixed comparisons fall back to double.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

 private:
  std::variant<mpq_class, double> value_;
};

Scalar abs(const Scalar& x);
Scalar pow(const Scalar& base, unsigned exponent);
/// Forces the floating representation.
Scalar to_floating(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Conversion used by the templated numeric kernels.
template <class T>
T scalar_as(const Scalar& x);

template <>
inline mpq_class scalar_as<mpq_class>(const Scalar& x) {
  return x.exact();
}

template <>
inline double scalar_as<double>(const Scalar& x) {
  return x.to_double();
}

inline Scalar make_scalar(const mpq_class& q) { return Scalar(q); }
inline Scalar make_scalar(double d) { return Scalar(d); }

}  // namespace graphonlab
