#include "stokesline/wright.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <utility>

#include "stokesline/errors.hpp"
#include "stokesline/power_series.hpp"
#include "stokesline/special.hpp"
#include "stokesline/tanh_sinh.hpp"

namespace stokesline {

namespace {

// growth scale of the series: terms peak near e^Z with Z = kappa (h z)^{1/kappa},
// h = alpha^alpha beta^-beta (double precision is plenty for sizing decisions)
double growth_scale(const WrightParams& p, double zmag) {
    const double al = p.alpha.get_d();
    const double be = p.beta.get_d();
    const double kd = p.kappa().get_d();
    const double h = std::pow(al, al) * std::pow(be, -be);
    return kd * std::pow(h * zmag, 1.0 / kd);
}

PowerSeries one_minus(const PowerSeries& s) {
    PowerSeries r = -s;
    r.set(0, r[0] + GammaPoly(1));
    return r;
}

}  // namespace

WrightParams::WrightParams(Rational alpha_in, Rational beta_in, Rational a_in, Rational b_in)
    : alpha(std::move(alpha_in)), beta(std::move(beta_in)), a(std::move(a_in)), b(std::move(b_in)) {
    if (alpha <= 0 || beta <= 0)
        throw InvalidInputError("wright: the gamma scale factors alpha and beta must be positive");
    if (kappa() <= 0)
        throw InvalidInputError("wright: kappa = 1 + beta - alpha must be positive for an entire series");
}

BigReal WrightParams::amp_equal_orders(mpfr_prec_t bits) const {
    return pow(BigReal::from_rational(alpha, bits), BigReal::from_rational(theta(), bits));
}

BigReal wright_series(const WrightParams& p, const BigReal& z, const PrecisionPolicy& policy) {
    // Gamma(alpha n + a) in the numerator must stay off the poles; only the
    // finitely many n with alpha n + a <= 0 can hit one
    long n_pole = 0;
    for (Rational arg = p.a; arg <= 0; arg += p.alpha, ++n_pole)
        if (is_integer(arg))
            throw InvalidInputError("wright_series: Gamma(alpha n + a) has a pole at term n = " +
                                    std::to_string(n_pole));

    const double scale = growth_scale(p, std::abs(z.to_double()));
    const int allowance = z.sign() < 0 ? cancellation_allowance(scale) : 0;
    const mpfr_prec_t work = policy.working_bits(allowance);

    const BigReal zw = z.at_precision(work);

    BigReal tiny = BigReal::from_long(1, work);
    mpfr_mul_2si(tiny.raw(), tiny.raw(), -static_cast<long>(work), MPFR_RNDN);

    const long cap = 1000 + 10 * static_cast<long>(scale + std::abs(p.a.get_d()) +
                                                   std::abs(p.b.get_d())) +
                     10L * policy.working_digits(allowance);

    const BigReal half = BigReal::from_rational(Rational(1, 2), work);
    BigReal sum = BigReal::from_long(0, work);
    BigReal zpow = BigReal::from_long(1, work);  // z^n / n!
    BigReal prev_mag = BigReal::from_long(0, work);
    Rational num_arg = p.a;
    Rational den_arg = p.b;
    for (long n = 0; n <= cap; ++n) {
        // a zero of 1/Gamma(beta n + b): the term vanishes, nothing to add
        if (!is_nonpositive_integer(den_arg)) {
            BigReal term = big_gamma(BigReal::from_rational(num_arg, work)) /
                           big_gamma(BigReal::from_rational(den_arg, work)) * zpow;
            BigReal mag = abs(term);
            sum += term;
            // geometric tail bound once the magnitudes decay by >= 2 per term
            if (n > 0 && !prev_mag.is_zero() && mag * 2 < prev_mag &&
                mag * 2 <= abs(sum) * tiny)
                return sum;
            prev_mag = mag;
        }
        zpow = zpow * zw / (n + 1);
        num_arg += p.alpha;
        den_arg += p.beta;
    }
    throw IterationLimitError("wright_series did not converge within the iteration cap");
}

BigReal wright_integral(const WrightParams& p, const BigReal& x, const PrecisionPolicy& policy) {
    if (!p.equal_orders())
        throw InvalidInputError("wright_integral: the beta-weighted integral requires alpha == beta");
    if (!(p.a > 0) || !(p.b > p.a))
        throw InvalidInputError("wright_integral: requires b > a > 0");

    const mpfr_prec_t work = policy.working_bits(0);
    const BigReal am1 = BigReal::from_rational(p.a - 1, work);
    const BigReal bam1 = BigReal::from_rational(p.b - p.a - 1, work);
    const BigReal al = BigReal::from_rational(p.alpha, work);
    const BigReal xw = x.at_precision(work);

    // t^{a-1} (1-t)^{b-a-1} e^{x t^alpha}, with 1-t supplied separately so
    // neither endpoint loses digits
    auto f = [&](const BigReal& t, const BigReal& omt) {
        return exp(am1 * log(t) + bam1 * log(omt) + xw * pow(t, al));
    };
    const double min_decay = std::min(p.a.get_d(), Rational(p.b - p.a).get_d());
    BigReal integral = tanh_sinh_01(f, work, policy.target_digits + 2, min_decay);
    return integral / big_gamma(BigReal::from_rational(p.b - p.a, work));
}

std::vector<Rational> wright_c_coeffs(const WrightParams& p, int J) {
    if (!p.equal_orders())
        throw InvalidInputError("wright_c_coeffs: the endpoint expansion requires alpha == beta");
    if (J < 0) throw InvalidInputError("wright_c_coeffs: J must be nonnegative");

    const int order = J + 3;

    // substitute u = 1 - t in the integral and expand about u = 0:
    // phi(u) = 1 - (1-u)^alpha carries the exponential decay e^{-x phi(u)}
    PowerSeries u = PowerSeries::identity(order);
    PowerSeries phi = one_minus(ps_pow(one_minus(u), GammaPoly(p.alpha)));

    // change variables to v = phi(u); u = psi(v) with psi'(0) = 1/alpha
    PowerSeries psi = ps_revert(phi);

    // P(v) dv = t^{a-1} (1-t)^{b-a-1} du expressed in v:
    //   (1 - psi)^{a-1} * (psi)^{b-a-1} * psi'(v),
    // with psi^{b-a-1} split as (psi/v)^{b-a-1} v^{b-a-1}; the v^{b-a-1}
    // factor integrates against e^{-xv} to Gamma(b-a+j) x^{-(b-a)-j},
    // leaving c_j = P_j (b-a)_j after normalizing by Gamma(b-a)
    PowerSeries t1 = ps_pow(one_minus(psi), GammaPoly(p.a - 1));
    PowerSeries psi_over_v(order - 1);
    for (int i = 0; i + 1 < order; ++i) psi_over_v.set(i, psi[i + 1]);
    PowerSeries t2 = ps_pow(GammaPoly(p.alpha) * psi_over_v, GammaPoly(p.b - p.a - 1));
    PowerSeries t3 = GammaPoly(p.alpha) * psi.derivative();
    PowerSeries P = t1 * t2 * t3;

    if (P.order() <= J)
        throw NeedsMoreCoefficientsError("wright_c_coeffs: expansion order fell short", J + 1);

    std::vector<Rational> c;
    c.reserve(J + 1);
    for (int j = 0; j <= J; ++j) {
        const GammaPoly& pj = P[j];
        if (!pj.is_constant())
            throw DerivationError("wright_c_coeffs: non-constant coefficient survived");
        c.push_back(pj.coeff(0) * pochhammer(p.b - p.a, j));
    }
    if (c[0] != 1) throw DerivationError("wright_c_coeffs: c_0 != 1, reversion inconsistent");
    return c;
}

MultiplierEstimate wright_multiplier(const WrightParams& p, const Rational& x, int J,
                                     const PrecisionPolicy& policy) {
    if (!p.equal_orders())
        throw InvalidInputError("wright_multiplier: implemented for alpha == beta only");
    if (!(p.a > 0) || !(p.b > p.a))
        throw InvalidInputError("wright_multiplier: requires b > a > 0");
    if (x <= 0) throw InvalidInputError("wright_multiplier: x must be positive");

    const Rational a_over_alpha = p.a / p.alpha;
    const Rational gamma_arg = p.b - p.beta * a_over_alpha;
    if (is_nonpositive_integer(gamma_arg))
        throw ParameterDegenerateError(
            "wright_multiplier: the algebraic normalization 1/Gamma(b - beta a/alpha) vanishes");

    const std::vector<Rational> c = wright_c_coeffs(p, J);

    // a trailing block of exact zeros means the exponential series terminates
    // (a/alpha a positive integer kills every later coefficient); take the
    // full finite sum instead of running the smallest-term rule
    long last_nonzero = 0;
    for (int j = 1; j <= J; ++j)
        if (c[j] != 0) last_nonzero = j;
    const bool terminated = last_nonzero <= J - 2;

    long j_star = -1;
    if (terminated) {
        j_star = last_nonzero + 1;
    } else {
        // optimal truncation: first index where |c_j x^-j| stops decreasing
        Rational prev_mag = abs(c[0]);
        for (int j = 1; j <= J; ++j) {
            Rational mag = abs(c[j]) / pow_int(x, j);
            if (mag >= prev_mag) {
                j_star = j;
                break;
            }
            prev_mag = mag;
        }
        if (j_star < 0)
            throw NeedsMoreCoefficientsError(
                "wright_multiplier: terms still decreasing at j = J, raise J", J + 1);
        if (j_star < 3)
            throw InvalidInputError(
                "wright_multiplier: optimal truncation below 3 terms, x too small to resolve "
                "the subdominant remainder");
    }

    const double xd = x.get_d();
    const int allowance = cancellation_allowance(growth_scale(p, xd));
    const PrecisionPolicy boosted{policy.target_digits + allowance, policy.guard_digits};
    const mpfr_prec_t work = policy.working_bits(allowance);

    const BigReal xw = BigReal::from_rational(x, work);
    const BigReal series = wright_series(p, xw, boosted);

    Rational truncated_sum = 0;
    for (long j = 0; j < j_star; ++j) truncated_sum += c[j] / pow_int(x, j);
    const BigReal amp = p.amp_equal_orders(work);
    const BigReal theta = BigReal::from_rational(p.theta(), work);
    const BigReal exp_factor = amp * exp(theta * log(xw) + xw);
    const BigReal exp_part = exp_factor * BigReal::from_rational(truncated_sum, work);

    const BigReal residual = series - exp_part;

    const BigReal lead = big_gamma(BigReal::from_rational(a_over_alpha, work)) /
                         big_gamma(BigReal::from_rational(gamma_arg, work)) /
                         BigReal::from_rational(p.alpha, work) *
                         exp(-BigReal::from_rational(a_over_alpha, work) * log(xw));

    const mpfr_prec_t out = policy.target_bits();
    MultiplierEstimate est{p,
                           x,
                           j_star,
                           (residual / lead).at_precision(out),
                           cos_sin_pi(a_over_alpha, out).cos_value,
                           (abs(exp_factor * BigReal::from_rational(c[j_star] / pow_int(x, j_star), work)) /
                            abs(lead))
                               .at_precision(out),
                           residual.at_precision(out),
                           lead.at_precision(out),
                           policy.target_digits};
    return est;
}

namespace {
nlohmann::json rational_json(const Rational& r) { return rational_to_string(r); }
}  // namespace

std::string MultiplierEstimate::to_json() const {
    nlohmann::json doc;
    doc["params"] = {{"alpha", rational_json(params.alpha)},
                     {"beta", rational_json(params.beta)},
                     {"a", rational_json(params.a)},
                     {"b", rational_json(params.b)}};
    doc["x"] = rational_json(x);
    doc["j_star"] = j_star;
    doc["S_est"] = s_est.str(precision_digits);
    doc["conjecture_value"] = conjecture_value.str(precision_digits);
    doc["abs_error_estimate"] = abs_error_estimate.str(precision_digits);
    doc["residual"] = residual.str(precision_digits);
    doc["leading_algebraic"] = leading_algebraic.str(precision_digits);
    return doc.dump(1);
}

}  // namespace stokesline
