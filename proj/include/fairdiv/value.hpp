#pragma once

#include "fairdiv/rational.hpp"

#include <compare>
#include <string>
#include <variant>

namespace fairdiv {

/// Absolute tolerance applied whenever a comparison involves a real value.
inline constexpr double kRealTolerance = 1e-9;

/// A utility amount. Exact rational everywhere except for values produced by
/// lifted (exponential) valuations, which carry a double approximation.
/// Any arithmetic touching a real value yields a real value.
class Value {
 public:
  Value() : rep_(Rational(0)) {}
  Value(Rational r) : rep_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Value(int v) : rep_(Rational(v)) {}        // NOLINT(google-explicit-constructor)

  static Value real(double v) {
    Value out;
    out.rep_ = v;
    return out;
  }

  bool is_exact() const noexcept { return std::holds_alternative<Rational>(rep_); }
  /// Throws InvalidArgument for real values.
  const Rational& exact() const;
  double to_double() const;
  bool is_zero() const;

  /// "p/q" for exact values; 12 significant digits for real values.
  std::string to_string() const;

  Value& operator+=(const Value& rhs);
  Value& operator-=(const Value& rhs);
  Value& operator*=(const Value& rhs);

  friend Value operator+(Value lhs, const Value& rhs) { return lhs += rhs; }
  friend Value operator-(Value lhs, const Value& rhs) { return lhs -= rhs; }
  friend Value operator*(Value lhs, const Value& rhs) { return lhs *= rhs; }
  /// Division; the divisor must be non-zero.
  friend Value operator/(const Value& lhs, const Value& rhs);

  friend std::weak_ordering operator<=>(const Value& lhs, const Value& rhs);
  friend bool operator==(const Value& lhs, const Value& rhs) {
    return (lhs <=> rhs) == std::weak_ordering::equivalent;
  }

 private:
  std::variant<Rational, double> rep_;
};

}  // namespace fairdiv
