#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace supconv {

// GMP rationals are kept canonical (reduced, positive denominator) after every
// arithmetic operation, which is the invariant the rest of the code relies on.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "p/q" or "-p/q". Throws Error(InvalidInput) on junk.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string to_string(const Rational& value);

Integer floor(const Rational& value);
bool is_integral(const Rational& value);
Rational abs(const Rational& value);
Rational pow(const Rational& base, unsigned exponent);
Integer binomial(long n, long k);

/// Decimal approximation for human-facing output only.
double to_double(const Rational& value);

}  // namespace supconv
