#pragma once

#include <functional>

#include "stokesline/big_real.hpp"

namespace stokesline {

// Double-exponential (tanh-sinh) quadrature over (0,1) for integrands with
// algebraic endpoint singularities.  The integrand receives both t and 1-t,
// each computed without cancellation near its own endpoint:
//   t = 1/(1+E), 1-t = E/(1+E), E = exp(-pi sinh u).
// min_decay is a positive lower bound on the decay exponent of f times the
// transformed weight at either endpoint, in units of exp(-pi sinh u): for
// f ~ t^{a-1} near t = 0 and ~ (1-t)^{b-a-1} near t = 1 that is min(a, b-a),
// capped at 1.  It widens the abscissa range so shallow singularities are
// integrated to the working noise floor.
// The step is halved until two successive levels agree to 10^{-target_digits}
// relative; QuadratureLimitError if that never happens within max_level.
BigReal tanh_sinh_01(const std::function<BigReal(const BigReal&, const BigReal&)>& f,
                     mpfr_prec_t work_bits, int target_digits, double min_decay = 1.0,
                     int max_level = 14);

}  // namespace stokesline
