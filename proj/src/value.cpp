#include "fairdiv/value.hpp"

#include "fairdiv/errors.hpp"

#include <cmath>
#include <cstdio>

namespace fairdiv {

const Rational& Value::exact() const {
  if (const auto* r = std::get_if<Rational>(&rep_)) return *r;
  throw InvalidArgument("value " + to_string() + " is not exact");
}

double Value::to_double() const {
  if (const auto* r = std::get_if<Rational>(&rep_)) return r->get_d();
  return std::get<double>(rep_);
}

bool Value::is_zero() const {
  if (const auto* r = std::get_if<Rational>(&rep_)) return *r == 0;
  return std::abs(std::get<double>(rep_)) <= kRealTolerance;
}

std::string Value::to_string() const {
  if (const auto* r = std::get_if<Rational>(&rep_)) return format_rational(*r);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", std::get<double>(rep_));
  return buf;
}

Value& Value::operator+=(const Value& rhs) {
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(rep_) += std::get<Rational>(rhs.rep_);
  } else {
    rep_ = to_double() + rhs.to_double();
  }
  return *this;
}

Value& Value::operator-=(const Value& rhs) {
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(rep_) -= std::get<Rational>(rhs.rep_);
  } else {
    rep_ = to_double() - rhs.to_double();
  }
  return *this;
}

Value& Value::operator*=(const Value& rhs) {
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(rep_) *= std::get<Rational>(rhs.rep_);
  } else {
    rep_ = to_double() * rhs.to_double();
  }
  return *this;
}

Value operator/(const Value& lhs, const Value& rhs) {
  if (rhs.is_zero()) throw InvalidArgument("division by zero value");
  if (lhs.is_exact() && rhs.is_exact()) {
    return Value(Rational(std::get<Rational>(lhs.rep_) / std::get<Rational>(rhs.rep_)));
  }
  return Value::real(lhs.to_double() / rhs.to_double());
}

std::weak_ordering operator<=>(const Value& lhs, const Value& rhs) {
  if (lhs.is_exact() && rhs.is_exact()) {
    const int c = cmp(std::get<Rational>(lhs.rep_), std::get<Rational>(rhs.rep_));
    if (c < 0) return std::weak_ordering::less;
    if (c > 0) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }
  const double a = lhs.to_double();
  const double b = rhs.to_double();
  if (std::abs(a - b) <= kRealTolerance || a == b) return std::weak_ordering::equivalent;
  return a < b ? std::weak_ordering::less : std::weak_ordering::greater;
}

}  // namespace fairdiv
