#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "sepline/errors.hpp"

namespace sepline {

/// Exact arbitrary-precision rational scalar.  GMP keeps the value
/// canonical: positive denominator, gcd(|num|, den) = 1.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign_of(const Rational& q) { return sgn(q); }
inline int sign_of(const Integer& z) { return sgn(z); }

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Parses "p", "-p" or "p/q" with q > 0 after normalization.
/// Throws ParseError on malformed text or a zero denominator.
Rational rational_from_string(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& q);

/// Decimal expansion with up to `significant_digits` significant digits,
/// truncated (not rounded).  Used only for SVG coordinates.
std::string rational_to_decimal(const Rational& q, int significant_digits = 30);

}  // namespace sepline
