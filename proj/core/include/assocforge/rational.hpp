#pragma once

#include <gmpxx.h>

#include <string>

namespace assocforge {

// All coefficients in the library are exact rationals. No floating point
// appears anywhere in the computational path.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "num/den" rendering: lowest terms, positive denominator,
/// denominator always present ("1/1", "-1/24").
std::string fraction_string(const Rational& q);

/// Parses "num/den" or a bare integer. Throws std::invalid_argument on
/// malformed input.
Rational parse_fraction(const std::string& text);

}  // namespace assocforge
