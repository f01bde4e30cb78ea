#pragma once

#include <gmpxx.h>

#include <string>

#include "sck/errors.hpp"

namespace sck {

/// Exact arbitrary-precision rational scalar. mpq_class already keeps the
/// canonical form (gcd 1, positive denominator), which is exactly the
/// invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", plain integers, and exact decimal strings including
/// scientific notation ("0.34" -> 17/50, "5.0e-12" -> 1/200000000000).
Rational rational_from_string(const std::string& s);

/// Canonical "p/q" rendering, denominator always spelled out ("-3/1").
std::string rational_to_string(const Rational& r);

Integer factorial(unsigned n);
Rational rational_pow(const Rational& base, long exp);

double to_double(const Rational& r);

} // namespace sck
