#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gamma_sharp {

// Exact rational; mpq_class keeps numerator/denominator canonical (gcd 1,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", "-p", and plain decimals such as "12.5" or "1e4".
Rational parse_rational(std::string_view text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& q);

Integer binomial(unsigned long n, unsigned long k);

int sign(const Rational& q);
Rational pow(const Rational& base, unsigned int exponent);

}  // namespace gamma_sharp
