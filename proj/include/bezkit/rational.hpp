#pragma once

#include <gmpxx.h>

#include <string>

namespace bez {

using Integer = mpz_class;

// Arbitrary-precision rational, always canonical: gcd(|num|, den) = 1,
// den > 0, zero is 0/1.  GMP maintains these invariants for us.
using Rational = mpq_class;

// Accepts "a" or "a/b" with optional leading '-'.  Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

// "a" when the denominator is 1, otherwise "a/b".
std::string render_rational(const Rational& r);

}  // namespace bez
