#include "stokesline/special.hpp"

#include <cmath>
#include <vector>

#include "stokesline/errors.hpp"

namespace stokesline {

namespace {

int digits_for_bits(mpfr_prec_t bits) {
    return std::max(1, static_cast<int>(static_cast<double>(bits) / 3.3219280948873626));
}

// Spouge parameter for a relative error below 10^-digits: the bound is
// a^{-1/2} (2pi)^{-(a+1/2)}, so a = digits * ln 10 / ln 2pi plus a margin.
long spouge_parameter(int digits) {
    return static_cast<long>(std::ceil(digits * 1.2528)) + 2;
}

// Gamma(x) for x >= 1/2 by the Spouge series
//   Gamma(x) = (x+a-1)^{x-1/2} e^{-(x+a-1)} [ sqrt(2pi) + sum_k c_k/(x-1+k) ]
// with c_k = (-1)^{k-1} (a-k)^{k-1/2} e^{a-k} / (k-1)!.  The c_k peak near
// e^a, which costs a * log10(2) extra digits of cancellation; work precision
// below accounts for that.
BigReal spouge_gamma(const BigReal& x, long a, mpfr_prec_t work) {
    BigReal z = x.at_precision(work) - 1;

    BigReal sum = sqrt(BigReal::pi(work) * 2);
    BigReal fact = BigReal::from_long(1, work);
    for (long k = 1; k < a; ++k) {
        if (k > 1) fact = fact * (k - 1);
        BigReal ak = BigReal::from_long(a - k, work);
        BigReal ck =
            pow(ak, BigReal::from_rational(Rational(2 * k - 1, 2), work)) * exp(ak) / fact;
        if (k % 2 == 0) ck = -ck;
        sum += ck / (z + k);
    }

    BigReal base = z + a;
    return pow(base, z + BigReal::from_rational(Rational(1, 2), work)) / exp(base) * sum;
}

}  // namespace

BigReal big_gamma(const BigReal& x) {
    if (!x.is_finite()) throw InvalidInputError("gamma of a non-finite value");
    const mpfr_prec_t prec = x.precision();
    const int digits = digits_for_bits(prec);
    const long a = spouge_parameter(digits);
    // cancellation inside the Spouge sum loses about a*log10(2) digits
    const mpfr_prec_t work = prec + bits_for_digits(static_cast<int>(a / 3) + 10);

    if (x.sign() <= 0 || x.is_integer()) {
        // reject poles, including values one ulp away from one
        BigReal nearest(prec);
        mpfr_round(nearest.raw(), x.raw());
        if (nearest.sign() <= 0) {
            BigReal diff = abs(x - nearest);
            BigReal ulp = BigReal::from_long(1, prec);
            mpfr_mul_2si(ulp.raw(), ulp.raw(), x.is_zero() ? -prec : mpfr_get_exp(x.raw()) - prec,
                         MPFR_RNDN);
            if (diff <= ulp)
                throw GammaPoleError("gamma pole at " + nearest.str(8), nearest.to_long());
        }
    }

    BigReal half = BigReal::from_rational(Rational(1, 2), work);
    if (x >= half) return spouge_gamma(x, a, work).at_precision(prec);

    // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
    BigReal xw = x.at_precision(work);
    BigReal s = sin_pi(xw);
    BigReal g = spouge_gamma(BigReal::from_long(1, work) - xw, a, work);
    return (BigReal::pi(work) / (s * g)).at_precision(prec);
}

BigReal big_ei(const BigReal& x) {
    if (x.sign() <= 0) throw InvalidInputError("Ei requires a positive argument here");
    BigReal r(x.precision());
    mpfr_eint(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

CosSinPi cos_sin_pi(const Rational& q, mpfr_prec_t bits) {
    // q = n + f with f in [0,1): cos/sin pick up (-1)^n
    mpz_class n_z;
    mpz_fdiv_q(n_z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    Rational f = q - Rational(n_z);
    bool flip = mpz_odd_p(n_z.get_mpz_t()) != 0;

    CosSinPi r;
    if (f == 0) {
        r.cos_value = BigReal::from_long(flip ? -1 : 1, bits);
        r.sin_value = BigReal::from_long(0, bits);
        r.sin_is_zero = true;
        return r;
    }
    if (f == Rational(1, 2)) {
        r.cos_value = BigReal::from_long(0, bits);
        r.cos_is_zero = true;
        r.sin_value = BigReal::from_long(flip ? -1 : 1, bits);
        return r;
    }

    const mpfr_prec_t work = bits + 16;
    BigReal angle = BigReal::pi(work) * BigReal::from_rational(f, work);
    r.cos_value = cos(angle).at_precision(bits);
    r.sin_value = sin(angle).at_precision(bits);
    if (flip) {
        r.cos_value = -r.cos_value;
        r.sin_value = -r.sin_value;
    }
    return r;
}

BigReal cos_pi(const BigReal& x) {
    const mpfr_prec_t work = x.precision() + 16;
    BigReal f = x.at_precision(work) - floor(x.at_precision(work));
    BigReal c = cos(BigReal::pi(work) * f);
    if (floor(x).to_long() % 2 != 0) c = -c;
    return c.at_precision(x.precision());
}

BigReal sin_pi(const BigReal& x) {
    const mpfr_prec_t work = x.precision() + 16;
    BigReal f = x.at_precision(work) - floor(x.at_precision(work));
    BigReal s = sin(BigReal::pi(work) * f);
    if (floor(x).to_long() % 2 != 0) s = -s;
    return s.at_precision(x.precision());
}

}  // namespace stokesline
