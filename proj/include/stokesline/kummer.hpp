#pragma once

#include "stokesline/big_real.hpp"

namespace stokesline {

// Kummer's function M(a;b;x) = sum_n (a)_n x^n / ((b)_n n!) (DLMF 13.2.2),
// summed term by term until a geometric tail bound drops below the working
// accuracy.  For x < 0 the terms alternate and peak near e^{|x|}, so the
// working precision automatically includes the cancellation allowance.
// Returns the value at working precision; callers round to target.
BigReal kummer_m(const BigReal& a, const BigReal& b, const BigReal& x,
                 const PrecisionPolicy& policy);

}  // namespace stokesline
