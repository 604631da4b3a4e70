#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polyinf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "7", "-3/4" or "0.125" into an exact rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

Rational pow(const Rational& base, long exponent);

Rational floor_rational(const Rational& r);
Rational ceil_rational(const Rational& r);

/// The rational with the smallest denominator in the closed interval
/// [lo, hi] (Stern-Brocot descent). Requires lo <= hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

inline double to_double(const Rational& r) { return r.get_d(); }

/// Closest rational with a power-of-two denominator, exact for finite doubles.
Rational from_double(double value);

}  // namespace polyinf
