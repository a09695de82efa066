#pragma once

#include <gmpxx.h>

#include <string>

namespace stokesline {

// Exact rational arithmetic is delegated to GMP.  mpq_class already keeps
// values canonical (gcd 1, positive denominator), which is exactly the
// invariant we need; helpers below add the parsing and combinatorial bits.
using Rational = mpq_class;

// Parse "p/q" or a terminating decimal such as "-0.75" or "20" into an exact
// rational.  Throws InvalidInputError on anything else (including floats in
// exponent notation, which are ambiguous as exact values).
Rational rational_from_string(const std::string& s);

// Canonical "p" or "p/q" form, suitable for the coefficient cache.
std::string rational_to_string(const Rational& r);

bool is_integer(const Rational& r);
bool is_nonpositive_integer(const Rational& r);

// Exact conversion; throws InvalidInputError unless r is an integer that
// fits in a long.
long to_long(const Rational& r);

// Rising factorial (a)_n = a(a+1)...(a+n-1), n >= 0 (DLMF 5.2.4).
Rational pochhammer(const Rational& a, long n);

// a^n for any integer n (negative n requires a != 0).
Rational pow_int(const Rational& a, long n);

Rational factorial(long n);

}  // namespace stokesline
