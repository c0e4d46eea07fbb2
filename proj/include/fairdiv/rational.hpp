#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fairdiv {

using Rational = mpq_class;

/// num/den in canonical form. Throws InvalidArgument when den == 0.
Rational ratio(long num, long den);

/// Parses "p/q", "p", or a finite decimal such as "0.6" into a canonical
/// rational. Throws InvalidArgument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written with denominator 1.
std::string format_rational(const Rational& r);

/// Rational approximation of the golden ratio (ratio of consecutive
/// Fibonacci numbers) with absolute error below 1e-15.
const Rational& golden_ratio();

}  // namespace fairdiv
