#pragma once

#include <string>
#include <vector>

#include "stokesline/big_real.hpp"

namespace stokesline {

// Parameters of the Wright function
//   Psi(z) = sum_n Gamma(alpha n + a) / Gamma(beta n + b) * z^n / n!
// with alpha, beta > 0 and kappa = 1 + beta - alpha > 0 so the series is
// entire.  Exact rationals throughout; the derived quantities of the
// exponential expansion (kappa, h = alpha^alpha beta^-beta, theta = a - b,
// amp = kappa^{-theta-1/2} alpha^{a-1/2} beta^{1/2-b}) reduce to kappa = 1,
// h = 1, amp = alpha^{a-b} in the equal-parameter case used here.
struct WrightParams {
    Rational alpha;
    Rational beta;
    Rational a;
    Rational b;

    WrightParams(Rational alpha_in, Rational beta_in, Rational a_in, Rational b_in);

    Rational kappa() const { return 1 + beta - alpha; }
    Rational theta() const { return a - b; }
    bool equal_orders() const { return alpha == beta; }

    // amp for the equal-orders case, where it is exactly alpha^(a-b)
    BigReal amp_equal_orders(mpfr_prec_t bits) const;
};

// Direct summation with the same geometric tail bound as kummer_m.
// Rejects parameters that put a nonpositive-integer argument into the
// numerator gamma for some n (a genuine pole of a term).
BigReal wright_series(const WrightParams& p, const BigReal& z, const PrecisionPolicy& policy);

// For alpha = beta and b > a > 0 the function has the Euler-type integral
//   Psi(x) = (1/Gamma(b-a)) int_0^1 t^{a-1} (1-t)^{b-a-1} e^{x t^alpha} dt,
// evaluated by tanh-sinh quadrature (both endpoint singularities algebraic).
BigReal wright_integral(const WrightParams& p, const BigReal& x, const PrecisionPolicy& policy);

// Coefficients c_0..c_J of the exponential expansion
//   Psi(x) ~ amp x^{a-b} e^x sum_j c_j x^{-j}   (alpha = beta, arg x = 0)
// derived by Watson's lemma at the t = 1 endpoint of the integral: with
// u = 1 - t expand the algebraic factors and exp(x((1-u)^alpha - 1)) as
// exact series in u and integrate termwise.  c_0 = 1 is asserted.
std::vector<Rational> wright_c_coeffs(const WrightParams& p, int J);

// Stokes-multiplier estimate on arg z = 0: remove the optimally truncated
// exponential expansion from the series value and normalize the remainder
// by the leading algebraic term
//   (1/alpha) Gamma(a/alpha) / Gamma(b - beta a/alpha) x^{-a/alpha},
// giving S_est to compare against the conjectured cos(pi a/alpha).  The
// error bar is the first omitted exponential term under the same
// normalization; nothing is asserted about the conjecture here.
struct MultiplierEstimate {
    WrightParams params;
    Rational x;
    long j_star = 0;           // truncation index of the exponential sum
    BigReal s_est;
    BigReal conjecture_value;  // cos(pi a/alpha)
    BigReal abs_error_estimate;
    BigReal residual;          // Psi - truncated exponential part
    BigReal leading_algebraic;
    int precision_digits = 30;

    std::string to_json() const;
};

MultiplierEstimate wright_multiplier(const WrightParams& p, const Rational& x, int J,
                                     const PrecisionPolicy& policy);

}  // namespace stokesline
