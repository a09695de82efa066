#include "stokesline/stokes_line.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "stokesline/errors.hpp"
#include "stokesline/kummer.hpp"
#include "stokesline/special.hpp"
#include "stokesline/terminant.hpp"

namespace stokesline {

namespace {

double rational_as_double(const Rational& x) { return mpq_get_d(x.get_mpq_t()); }

}  // namespace

KummerParams::KummerParams(Rational a_in, Rational b_in) : a(std::move(a_in)), b(std::move(b_in)) {
    if (is_nonpositive_integer(a))
        throw InvalidInputError(
            "a must not be zero or a negative integer (the expansion degenerates to a polynomial)");
    if (is_nonpositive_integer(b))
        throw InvalidInputError("b must not be zero or a negative integer");
}

Rational TruncationChoice::gamma_of(long j) const {
    if (!alpha)
        throw InvalidInputError("truncation for integer a carries no shift parameter alpha");
    return *alpha - Rational(j);
}

Rational coeff_a(long j, const KummerParams& p) {
    if (j < 0) throw InvalidInputError("coeff_a needs j >= 0");
    Rational shifted = p.a - p.b + 1;
    return pochhammer(p.a, j) * pochhammer(shifted, j) / factorial(j);
}

TruncationChoice choose_m0(const KummerParams& p, const Rational& x,
                           std::optional<long> m0_override) {
    Rational regime = abs(p.a) + abs(p.b);
    if (regime < 4) regime = 4;
    if (!(x > regime))
        throw InvalidInputError("x is outside the asymptotic regime (need x > max(4, |a|+|b|))");

    TruncationChoice t;
    Rational spread = 2 * p.a - p.b;

    if (m0_override) {
        if (*m0_override < 1) throw InvalidInputError("m0 override must be at least 1");
        t.m0 = *m0_override;
        t.used_override = true;
        if (!p.integer_a()) {
            Rational al = Rational(t.m0) - x - spread;
            if (!(abs(al) < 1))
                throw TruncationError("m0 override " + std::to_string(t.m0) +
                                      " gives |alpha| >= 1");
            t.alpha = al;
        }
        return t;
    }

    if (p.integer_a()) {
        // (1-a)_j kills every term with j >= a: the dominant series is exact
        t.m0 = to_long(p.a);
        return t;
    }

    // smallest j >= 1 with |t_j| >= |t_{j-1}|, t_j = (b-a)_j (1-a)_j/(j! x^j),
    // all comparisons exact
    const long cap = 4 * (static_cast<long>(rational_as_double(x)) + 1) + 400;
    long m0 = 0;
    Rational term = 1;
    Rational prev_abs = 1;
    for (long j = 1; j <= cap; ++j) {
        Rational grow = (p.b - p.a + (j - 1)) * (1 - p.a + (j - 1));
        term = term * grow / (j * x);
        if (abs(term) >= prev_abs) {
            m0 = j;
            break;
        }
        prev_abs = abs(term);
    }
    if (m0 == 0)
        throw TruncationError("no non-decreasing term found below the search cap");

    // nudge until the offset alpha lands in (-1, 1)
    Rational al = Rational(m0) - x - spread;
    while (!(abs(al) < 1) && m0 > 1) {
        m0 += al > 0 ? -1 : 1;
        al = Rational(m0) - x - spread;
    }
    if (!(abs(al) < 1))
        throw TruncationError("could not reach |alpha| < 1 by adjusting m0");
    t.m0 = m0;
    t.alpha = al;
    return t;
}

Rational coeff_b_exact(long j, const KummerParams& p, const TruncationChoice& t,
                       const GTable& gtable) {
    if (j < 0) throw InvalidInputError("coeff_b needs j >= 0");
    Rational sum = 0;
    for (long k = 0; k <= j; ++k) {
        const GammaPoly& g2k = gtable.even(static_cast<int>(k));
        Rational piece = pow_int(Rational(-2), k) * pochhammer(Rational(1, 2), k) *
                         coeff_a(j - k, p) * g2k.eval(t.gamma_of(j - k));
        sum += piece;
    }
    return sum;
}

BigReal coeff_b(long j, const KummerParams& p, const TruncationChoice& t, const GTable& gtable,
                const PrecisionPolicy& policy) {
    return BigReal::from_rational(coeff_b_exact(j, p, t, gtable), policy.target_bits());
}

CoeffTable build_coeff_table(long j_max, const KummerParams& p, const TruncationChoice& t,
                             const GTable& gtable) {
    if (j_max < 0) throw InvalidInputError("coefficient table needs j_max >= 0");
    CoeffTable table;
    for (long j = 0; j <= j_max; ++j) table.A.push_back(coeff_a(j, p));
    if (t.alpha) {
        for (long j = 0; j <= j_max; ++j) table.B.push_back(coeff_b_exact(j, p, t, gtable));
        table.k_used = static_cast<int>(j_max);
    }
    return table;
}

namespace {

// exact truncated dominant-series sum  sum_{j<m0} (b-a)_j (1-a)_j / (j! x^j)
Rational dominant_sum(const KummerParams& p, const Rational& x, long m0) {
    Rational sum = 0;
    Rational term = 1;
    for (long j = 0; j < m0; ++j) {
        if (j > 0) {
            Rational grow = (p.b - p.a + (j - 1)) * (1 - p.a + (j - 1));
            term = term * grow / (j * x);
        }
        sum += term;
    }
    return sum;
}

}  // namespace

BigReal exp_sum_opt(const KummerParams& p, const Rational& x, const TruncationChoice& t,
                    const PrecisionPolicy& policy) {
    if (!(x > 0)) throw InvalidInputError("exp_sum_opt needs x > 0");
    const mpfr_prec_t work = policy.working_bits(cancellation_allowance(rational_as_double(x)));
    BigReal xb = BigReal::from_rational(x, work);
    BigReal apow = BigReal::from_rational(p.a - p.b, work);
    BigReal pref = exp(apow * log(xb) + xb) / big_gamma(BigReal::from_rational(p.a, work));
    return pref * BigReal::from_rational(dominant_sum(p, x, t.m0), work);
}

BigReal residual_f(const KummerParams& p, const Rational& x, const TruncationChoice& t,
                   const PrecisionPolicy& policy) {
    const int allowance = cancellation_allowance(rational_as_double(x));
    const mpfr_prec_t work = policy.working_bits(allowance);
    // the subtraction below cancels e^x-sized quantities, so the Kummer sum
    // is evaluated with the allowance folded into its target
    PrecisionPolicy boosted{policy.target_digits + allowance, policy.guard_digits};
    BigReal xb = BigReal::from_rational(x, work);
    BigReal m = kummer_m(BigReal::from_rational(p.a, work), BigReal::from_rational(p.b, work), xb,
                         boosted)
                    .at_precision(work);
    BigReal f = m / big_gamma(BigReal::from_rational(p.b, work)) - exp_sum_opt(p, x, t, policy);
    return f.at_precision(policy.target_bits());
}

BigReal negative_axis_residual(const KummerParams& p, const Rational& x,
                               const TruncationChoice& t, const PrecisionPolicy& policy) {
    const int allowance = cancellation_allowance(rational_as_double(x));
    // two rounds of e^x cancellation: inside the alternating Kummer sum and
    // in the subtraction below
    const mpfr_prec_t work = policy.working_bits(2 * allowance);
    PrecisionPolicy boosted{policy.target_digits + allowance, policy.guard_digits};
    BigReal xb = BigReal::from_rational(x, work);
    BigReal m = kummer_m(BigReal::from_rational(p.b - p.a, work),
                         BigReal::from_rational(p.b, work), -xb, boosted)
                    .at_precision(work);
    BigReal apow = BigReal::from_rational(p.a - p.b, work);
    BigReal pref = exp(apow * log(xb)) / big_gamma(BigReal::from_rational(p.a, work));
    BigReal f = m / big_gamma(BigReal::from_rational(p.b, work)) -
                pref * BigReal::from_rational(dominant_sum(p, x, t.m0), work);
    return f.at_precision(policy.target_bits());
}

namespace {

// shared by algebraic_h and the first-omitted estimates: x^{-a}/Gamma(b-a),
// zero when 1/Gamma(b-a) vanishes
BigReal algebraic_prefactor(const KummerParams& p, const Rational& x, mpfr_prec_t work) {
    Rational bma = p.b - p.a;
    if (is_nonpositive_integer(bma)) return BigReal::from_long(0, work);
    BigReal xb = BigReal::from_rational(x, work);
    BigReal ma = BigReal::from_rational(-p.a, work);
    return exp(ma * log(xb)) / big_gamma(BigReal::from_rational(bma, work));
}

}  // namespace

BigReal algebraic_h(const KummerParams& p, const Rational& x, const TruncationChoice& t, long M,
                    const GTable& gtable, const PrecisionPolicy& policy) {
    if (M < 0) throw InvalidInputError("algebraic_h needs M >= 0");
    if (!(x > 0)) throw InvalidInputError("algebraic_h needs x > 0");
    const mpfr_prec_t work = policy.working_bits(0);

    BigReal pref = algebraic_prefactor(p, x, work);
    if (pref.is_zero()) return pref.at_precision(policy.target_bits());

    CosSinPi cs = cos_sin_pi(p.a, work);
    BigReal acc = BigReal::from_long(0, work);

    if (!cs.cos_is_zero) {
        Rational asum = 0;
        for (long j = 0; j <= M; ++j) {
            Rational piece = coeff_a(j, p) / pow_int(x, j);
            asum += (j % 2 == 0) ? piece : -piece;
        }
        acc += cs.cos_value * BigReal::from_rational(asum, work);
    }
    if (!cs.sin_is_zero) {
        Rational bsum = 0;
        for (long j = 0; j <= M; ++j) {
            Rational piece = coeff_b_exact(j, p, t, gtable) / pow_int(x, j);
            bsum += (j % 2 == 0) ? piece : -piece;
        }
        BigReal xb = BigReal::from_rational(x, work);
        BigReal two_pi_x = BigReal::pi(work) * 2 * xb;
        acc += (cs.sin_value * 2 / sqrt(two_pi_x)) * BigReal::from_rational(bsum, work);
    }
    return (pref * acc).at_precision(policy.target_bits());
}

StokesReport stokes_report(const KummerParams& p, const Rational& x, long m_max,
                           const GTable& gtable, const PrecisionPolicy& policy,
                           std::optional<long> m0_override) {
    if (m_max < 0) throw InvalidInputError("stokes_report needs m_max >= 0");
    TruncationChoice t = choose_m0(p, x, m0_override);

    StokesReport report{p, x, t, policy.target_digits, is_nonpositive_integer(p.b - p.a),
                        BigReal(), {}};
    report.F = residual_f(p, x, t, policy);

    const mpfr_prec_t work = policy.working_bits(0);
    const mpfr_prec_t tb = policy.target_bits();
    BigReal pref_mag = abs(algebraic_prefactor(p, x, work));
    CosSinPi cs = cos_sin_pi(p.a, work);
    BigReal xb = BigReal::from_rational(x, work);
    BigReal bscale = abs(cs.sin_value) * 2 / sqrt(BigReal::pi(work) * 2 * xb);

    for (long M = 0; M <= m_max; ++M) {
        StokesRow row;
        row.M = M;
        row.H = algebraic_h(p, x, t, M, gtable, policy);
        Rational xpow = pow_int(x, M + 1);
        Rational a_next = abs(coeff_a(M + 1, p)) / xpow;
        row.first_omitted_A =
            (cs.cos_is_zero ? BigReal::from_long(0, work)
                            : pref_mag * abs(cs.cos_value) * BigReal::from_rational(a_next, work))
                .at_precision(tb);
        if (!cs.sin_is_zero) {
            Rational b_next = abs(coeff_b_exact(M + 1, p, t, gtable)) / xpow;
            row.first_omitted_B = (pref_mag * bscale * BigReal::from_rational(b_next, work))
                                      .at_precision(tb);
        } else {
            row.first_omitted_B = BigReal::from_long(0, tb);
        }
        row.diff = abs(report.F - row.H);
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

nlohmann::json rational_json(const Rational& r) { return rational_to_string(r); }

}  // namespace

std::string StokesReport::to_json() const {
    nlohmann::json doc;
    doc["params"] = {{"a", rational_json(params.a)}, {"b", rational_json(params.b)}};
    doc["x"] = rational_json(x);
    doc["m0"] = truncation.m0;
    doc["alpha"] = truncation.alpha ? rational_json(*truncation.alpha) : nlohmann::json(nullptr);
    doc["m0_overridden"] = truncation.used_override;
    doc["precision"] = precision_digits;
    doc["degenerate_reciprocal_gamma"] = degenerate_reciprocal_gamma;
    doc["F"] = F.str(precision_digits);
    doc["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
        doc["rows"].push_back({{"M", row.M},
                               {"H", row.H.str(precision_digits)},
                               {"first_omitted_A", row.first_omitted_A.str(precision_digits)},
                               {"first_omitted_B", row.first_omitted_B.str(precision_digits)}});
    }
    return doc.dump(1);
}

std::string StokesReport::to_table() const {
    constexpr int kDigits = 11;
    std::ostringstream out;
    out << "a = " << rational_to_string(params.a) << "  b = " << rational_to_string(params.b)
        << "  x = " << rational_to_string(x) << "  m0 = " << truncation.m0;
    if (truncation.alpha) out << "  alpha = " << rational_to_string(*truncation.alpha);
    if (truncation.used_override) out << "  (m0 overridden)";
    out << "  precision = " << precision_digits << "\n";
    if (degenerate_reciprocal_gamma)
        out << "note: 1/Gamma(b-a) = 0, the algebraic expansion vanishes identically\n";

    out << std::left << std::setw(4) << "M" << std::setw(20) << "H_M" << std::setw(18)
        << "omitted_A" << std::setw(18) << "omitted_B" << "|F - H_M|" << "\n";
    for (const auto& row : rows) {
        out << std::left << std::setw(4) << row.M << std::setw(20) << row.H.str(kDigits)
            << std::setw(18) << row.first_omitted_A.str(4) << std::setw(18)
            << row.first_omitted_B.str(4) << row.diff.str(4) << "\n";
    }
    out << std::left << std::setw(4) << "F" << F.str(kDigits) << "\n";
    return out.str();
}

std::string StokesReport::to_csv() const {
    std::ostringstream out;
    out << "M,H_M,first_omitted_A,first_omitted_B\n";
    for (const auto& row : rows)
        out << row.M << "," << row.H.str(precision_digits) << ","
            << row.first_omitted_A.str(precision_digits) << ","
            << row.first_omitted_B.str(precision_digits) << "\n";
    out << "F," << F.str(precision_digits) << ",,\n";
    return out.str();
}

TerminantCheck terminant_consistency(const KummerParams& p, const Rational& x,
                                     const TruncationChoice& t, long j, int M,
                                     const GTable& gtable, const PrecisionPolicy& policy) {
    if (M < 1) throw InvalidInputError("terminant check needs M >= 1");
    if (j < 0) throw InvalidInputError("terminant check needs j >= 0");
    if (!t.alpha)
        throw InvalidInputError("terminant check needs the non-integer-a truncation (alpha)");
    const mpfr_prec_t work = policy.working_bits(0);

    Rational nu_j = x + *t.alpha - j;
    if (!(nu_j > 0)) throw InvalidInputError("nu - j must stay positive");

    BigComplex lhs = terminant_on_stokes(BigReal::from_rational(nu_j, work),
                                         BigReal::from_rational(x, work), policy);

    Rational gj = t.gamma_of(j);
    Rational gsum = 0;
    for (int k = 0; k < M; ++k)
        gsum += pochhammer(Rational(1, 2), k) * gtable.even(k).eval(gj) *
                pow_int(x / 2, -static_cast<long>(k));

    BigReal root = sqrt(BigReal::pi(work) * 2 * BigReal::from_rational(x, work));
    TerminantCheck check;
    check.lhs = lhs;
    check.rhs_im = -(BigReal::from_rational(gsum, work) / root);
    check.re_diff = abs(lhs.re - BigReal::from_rational(Rational(1, 2), work));
    check.im_diff = abs(lhs.im - check.rhs_im);
    Rational omitted = pochhammer(Rational(1, 2), M) * abs(gtable.even(M).eval(gj)) *
                       pow_int(x / 2, -static_cast<long>(M));
    check.first_omitted = BigReal::from_rational(omitted, work) / root;
    return check;
}

}  // namespace stokesline
