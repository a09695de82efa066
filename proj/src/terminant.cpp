#include "stokesline/terminant.hpp"

#include <cmath>

#include "stokesline/errors.hpp"
#include "stokesline/kummer.hpp"
#include "stokesline/special.hpp"

namespace stokesline {

namespace {

// T_N(x e^{i pi}) for exact integer nu = N >= 1.  Everything stays in
// explicit real/imaginary parts; the only transcendental inputs are Ei(x),
// e^x and pi.
BigComplex terminant_integer(long n, const BigReal& x, mpfr_prec_t work) {
    BigReal xw = x.at_precision(work);

    // Gamma(0, x e^{i pi}) = -Ei(x) - i pi
    BigComplex g{-big_ei(xw), -BigReal::pi(work)};

    // downward recurrence: s runs 0, -1, ..., 2-N; z^{s-1} e^{-z} with
    // z = x e^{i pi} is (-1)^{s-1} x^{s-1} e^{x}, a real number
    BigReal ex = exp(xw);
    BigReal xpow = 1 / xw;  // x^{s-1} at s = 0
    for (long s = 0; s > 1 - n; --s) {
        BigReal real_piece = xpow * ex;
        if ((s - 1) % 2 != 0) real_piece = -real_piece;
        g.re = (g.re - real_piece) / (s - 1);
        g.im = g.im / (s - 1);
        xpow = xpow / xw;
    }

    // xi(N) = e^{i pi N} Gamma(N) / (2 pi i) = -i (-1)^N (N-1)!/(2 pi)
    BigReal c = BigReal::from_rational(factorial(n - 1), work) / (BigReal::pi(work) * 2);
    if (n % 2 != 0) c = -c;
    return {g.im * c, -g.re * c};  // multiply by -i c
}

}  // namespace

BigComplex terminant_on_stokes(const BigReal& nu, const BigReal& x,
                               const PrecisionPolicy& policy) {
    if (nu.sign() <= 0) throw InvalidInputError("terminant needs nu > 0");
    if (x.sign() <= 0) throw InvalidInputError("terminant needs x > 0");

    const double xd = x.to_double();
    const double nud = nu.to_double();

    if (nu.is_integer()) {
        // The recurrence cancels e^x-sized quantities down to an e^{-x}-sized
        // result scaled by 1/Gamma(N); budget digits for both.
        int allowance = 2 * cancellation_allowance(xd) +
                        static_cast<int>(std::lgamma(nud) / 2.302585092994046) + 10;
        const mpfr_prec_t work = policy.working_bits(allowance);
        return terminant_integer(nu.to_long(), x, work);
    }

    BigReal nearest(nu.precision());
    mpfr_round(nearest.raw(), nu.raw());
    if (abs(nu - nearest) < BigReal::from_rational(Rational(1, 10000000000L), nu.precision()))
        throw ParameterDegenerateError(
            "terminant order within 1e-10 of an integer; perturb the truncation offset");

    // modest extra digits: the Kummer sum peaks near e^x, the rest is tame
    const int allowance = cancellation_allowance(xd) + static_cast<int>(nud * std::log10(xd)) + 10;
    const mpfr_prec_t work = policy.working_bits(allowance);

    BigReal nw = nu.at_precision(work);
    BigReal xw = x.at_precision(work);
    BigReal s = BigReal::from_long(1, work) - nw;  // 1 - nu, not an integer

    // Gamma(1-nu): reflection-safe through big_gamma
    BigReal gamma_s = big_gamma(s);

    // z^s s^{-1} M(s; s+1; -z) with z = x e^{i pi}: modulus x^s e^{x-ish}
    BigReal m = kummer_m(s, s + 1, xw, policy).at_precision(work);
    BigReal mod = exp(s * log(xw)) / s * m;  // x^s / s * M
    BigReal c = cos_pi(s);
    BigReal si = sin_pi(s);
    BigComplex lower{mod * c, mod * si};  // gamma_low(s, x e^{i pi})

    BigComplex upper{gamma_s - lower.re, -lower.im};  // Gamma(s, x e^{i pi})

    // xi(nu) = e^{i pi nu} Gamma(nu)/(2 pi i); 1/(2 pi i) = -i/(2 pi)
    BigReal gnu = big_gamma(nw);
    BigReal scale = gnu / (BigReal::pi(work) * 2);
    BigComplex phase{cos_pi(nw) * scale, sin_pi(nw) * scale};
    BigComplex xi{phase.im, -phase.re};  // multiplied by -i

    return xi * upper;
}

}  // namespace stokesline
