// numbers.hpp -- exact integer/rational arithmetic helpers
#pragma once

#include <gmpxx.h>

#include <string>

namespace zimin {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Arbitrary-precision rational, always kept in canonical reduced form
/// with a positive denominator.
using Rat = mpq_class;

/// base^exp for exp >= 0.
Int int_pow(unsigned long base, unsigned long exp);

/// q^exp as an exact rational; exp may be negative. Requires q >= 1.
Rat rat_qpow(int q, long exp);

/// x^exp for integer exp; negative exp inverts (x must be nonzero then).
Rat rat_pow(const Rat& x, long exp);

/// Renders a non-negative rational with exactly `digits` digits after the
/// decimal point, rounding half to even.
std::string to_decimal(const Rat& v, int digits);

/// Parses "3/4", "0.005", "1e-7", "2.5e-3" into an exact rational.
Rat rat_from_string(const std::string& s);

/// "num/den" form of a rational (den printed even when 1).
std::string to_fraction_string(const Rat& v);

} // namespace zimin
