#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace parchern {

/// Exact arbitrary-precision rational. Always kept canonical.
using Rational = mpq_class;
using Integer = mpz_class;

Rational makeRational(long num, long den = 1);

/// Serializes as "p/q" with q > 0 and gcd(|p|, q) = 1, including "n/1".
std::string toString(const Rational& value);

/// Accepts "p", "p/q", with optional sign and surrounding blanks.
Rational parseRational(std::string_view text);

/// Largest integer <= value.
Integer floorOf(const Rational& value);

/// value - floor(value), always in [0, 1).
Rational fractionalPart(const Rational& value);

bool isInteger(const Rational& value);

}  // namespace parchern
