#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace berndt {

using Integer = mpz_class;

// Exact rational number; GMP keeps it canonical (reduced, positive
// denominator, zero as 0/1) after every arithmetic operation.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(const Integer& numerator, const Integer& denominator);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

// Accepts "p/q", "p" and an optional leading sign. Throws InvalidArgument.
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, int exponent);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

inline Rational pow2(int exponent) { return pow(Rational(2), exponent); }

}  // namespace berndt
