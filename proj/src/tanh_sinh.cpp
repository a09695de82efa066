#include "stokesline/tanh_sinh.hpp"

#include <cmath>

#include "stokesline/errors.hpp"

namespace stokesline {

namespace {

// integrand value times the transformed weight at abscissa u
BigReal node(const std::function<BigReal(const BigReal&, const BigReal&)>& f, const BigReal& u,
             const BigReal& pi) {
    BigReal sh(u.precision());
    BigReal ch(u.precision());
    mpfr_sinh_cosh(sh.raw(), ch.raw(), u.raw(), MPFR_RNDN);
    BigReal e = exp(-(pi * sh));
    BigReal t = 1 / (e + 1);
    BigReal one_minus_t = e * t;
    BigReal weight = pi * ch * e * t * t;  // dt/du = pi cosh(u) E/(1+E)^2
    return f(t, one_minus_t) * weight;
}

}  // namespace

BigReal tanh_sinh_01(const std::function<BigReal(const BigReal&, const BigReal&)>& f,
                     mpfr_prec_t work_bits, int target_digits, double min_decay, int max_level) {
    if (target_digits <= 0) throw InvalidInputError("need a positive digit target");
    if (!(min_decay > 0)) throw InvalidInputError("min_decay must be positive");
    if (min_decay > 1.0) min_decay = 1.0;
    const BigReal pi = BigReal::pi(work_bits);
    const int work_digits = static_cast<int>(work_bits / 3.32) + 1;
    // beyond this u every node is below the working noise floor; the nodes
    // fall off like exp(-min_decay pi sinh u), so a shallow singularity
    // pushes the cap outward
    const double u_cap =
        std::asinh((work_digits * 2.302585 + 40.0) / (3.141592653589793 * min_decay));

    // node terms decay double-exponentially; stop a sweep after a few
    // consecutive negligible contributions
    BigReal floor_scale = BigReal::from_long(1, work_bits);
    BigReal noise(work_bits);
    mpfr_set_ui_2exp(noise.raw(), 1, -static_cast<long>(work_bits) - 8, MPFR_RNDN);

    auto sweep = [&](double h, long stride, long first, BigReal& acc) {
        // adds h-spaced nodes at u = k h for k = first, first+stride, ... on
        // both sides of zero
        for (int side = 0; side < 2; ++side) {
            int quiet = 0;
            for (long k = first; k * h <= u_cap; k += stride) {
                if (side == 1 && k == 0) break;  // u = 0 belongs to one side only
                BigReal u = BigReal::from_double(side == 0 ? k * h : -(k * h), work_bits);
                BigReal term = node(f, u, pi);
                acc += term;
                if (abs(term) <= noise * floor_scale) {
                    if (++quiet >= 3) break;
                } else {
                    quiet = 0;
                }
            }
            if (first == 0 && side == 0) first = stride;  // skip the shared origin
        }
    };

    BigReal integral(work_bits);
    BigReal prev(work_bits);
    BigReal tol = pow(BigReal::from_long(10, work_bits),
                      BigReal::from_long(-target_digits, work_bits));

    double h = 1.0;
    BigReal acc = BigReal::from_long(0, work_bits);
    sweep(h, 1, 0, acc);
    integral = acc * BigReal::from_double(h, work_bits);
    floor_scale = abs(integral) > BigReal::from_long(1, work_bits)
                      ? abs(integral)
                      : BigReal::from_long(1, work_bits);

    for (int level = 1; level <= max_level; ++level) {
        h /= 2;
        BigReal odd = BigReal::from_long(0, work_bits);
        sweep(h, 2, 1, odd);  // odd multiples of the new step
        prev = integral;
        integral = prev / 2 + odd * BigReal::from_double(h, work_bits);
        floor_scale = abs(integral) > BigReal::from_long(1, work_bits)
                          ? abs(integral)
                          : BigReal::from_long(1, work_bits);
        if (level >= 3) {
            BigReal diff = abs(integral - prev);
            BigReal scale = integral.is_zero() ? BigReal::from_long(1, work_bits) : abs(integral);
            if (diff <= tol * scale) return integral;
        }
    }
    throw QuadratureLimitError("tanh-sinh quadrature did not converge within the level cap");
}

}  // namespace stokesline
