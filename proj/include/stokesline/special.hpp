#pragma once

#include "stokesline/big_real.hpp"

namespace stokesline {

// Gamma function at the precision carried by x, via Spouge's approximation
// with the term count chosen from that precision; negative arguments go
// through the reflection formula (DLMF 5.5.3).  Throws GammaPoleError at
// zero and negative integers (including arguments within one ulp of one).
BigReal big_gamma(const BigReal& x);

// Exponential integral Ei(x) for x > 0 (DLMF 6.2.5).
BigReal big_ei(const BigReal& x);

// cos(pi q) and sin(pi q) for rational q with the integer and half-integer
// cases returned as exact zeros/units, so that e.g. sin(pi a) for integer a
// annihilates a sum instead of leaving noise in it.
struct CosSinPi {
    BigReal cos_value;
    BigReal sin_value;
    bool cos_is_zero = false;
    bool sin_is_zero = false;
};
CosSinPi cos_sin_pi(const Rational& q, mpfr_prec_t bits);

// cos(pi x), sin(pi x) for a general real x, reduced by the integer part
// before multiplying by pi
BigReal cos_pi(const BigReal& x);
BigReal sin_pi(const BigReal& x);

}  // namespace stokesline
