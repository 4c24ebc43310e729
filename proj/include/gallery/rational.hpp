#pragma once

#include <gmpxx.h>

#include <string>

namespace gallery {

/// Exact rational scalar used by the geometry kernel and the exact LP mode.
using Q = mpq_class;
using Z = mpz_class;

/// Parses an integer ("-7"), a fraction ("8/3"), or a decimal ("2.75") into a
/// canonical rational. Throws std::invalid_argument on malformed input or a
/// zero denominator.
Q parse_rational(const std::string& text);

/// Canonical text form: "n" for integers, otherwise "n/d" with d > 0 and
/// gcd(n, d) = 1. parse_rational(to_string(v)) == v.
std::string to_string(const Q& v);

double to_double(const Q& v);

/// Largest integer <= v. Throws std::overflow_error if the result does not
/// fit in long.
long floor_long(const Q& v);

/// Smallest integer >= v.
long ceil_long(const Q& v);

inline int sign(const Q& v) { return sgn(v); }

}  // namespace gallery
