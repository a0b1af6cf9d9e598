#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace virmod {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p", "-p", "p/q" (optional surrounding whitespace). Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// base^exp for any integer exponent; base must be nonzero when exp < 0.
Rational power(const Rational& base, long exp);

Rational factorial(unsigned n);

Rational binomial(long n, long k);

}  // namespace virmod
