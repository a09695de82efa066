#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stokesline/big_real.hpp"
#include "stokesline/stokes_coeffs.hpp"

namespace stokesline {

// Parameters of M(a;b;x).  Exact rationals so that every derived coefficient
// stays exact until final rounding.  a = 0 and negative integer a are
// rejected (the series in 1/x would terminate and the whole construction
// collapses to a polynomial identity); same for b as usual.
struct KummerParams {
    Rational a;
    Rational b;

    KummerParams(Rational a_in, Rational b_in);

    bool integer_a() const { return is_integer(a) && a > 0; }
};

// Optimal truncation of the exponentially large series at index m0 ~ x.
// alpha = m0 - x - (2a - b) measures the offset from the smallest term; the
// shift entering the terminant coefficients is gamma_of(j) = alpha - j.
// alpha is defined only when x is rational (it always is in this artifact's
// tables) and a is non-integer; for integer a the series terminates at
// m0 = a and no alpha is needed.
struct TruncationChoice {
    long m0 = 0;
    std::optional<Rational> alpha;
    bool used_override = false;

    Rational gamma_of(long j) const;
};

// A_j = (a)_j (1+a-b)_j / j!, exact.
Rational coeff_a(long j, const KummerParams& p);

// First-non-decreasing-term rule for |t_j| = |(b-a)_j (1-a)_j / (j! x^j)|:
// m0 is the index of the first term at least as large as its predecessor
// (the first term worth omitting), then nudged by +-1 until |alpha| < 1.
// x must be rational and comfortably inside the asymptotic regime
// (x > max(4, |a| + |b|)).  m0_override bypasses the rule but still records
// alpha; it exists because one published table column prefers m0 one below
// the rule's answer (both choices are valid, the B_j absorb the difference).
TruncationChoice choose_m0(const KummerParams& p, const Rational& x,
                           std::optional<long> m0_override = std::nullopt);

// B_j = sum_{k=0..j} (-2)^k (1/2)_k A_{j-k} G_{2k}(gamma_{j-k}), exact.
Rational coeff_b_exact(long j, const KummerParams& p, const TruncationChoice& t,
                       const GTable& gtable);
BigReal coeff_b(long j, const KummerParams& p, const TruncationChoice& t,
                const GTable& gtable, const PrecisionPolicy& policy);

// A and B through index j_max (B empty when alpha is undefined).
struct CoeffTable {
    std::vector<Rational> A;
    std::vector<Rational> B;
    int k_used = 0;  // G orders consumed
};
CoeffTable build_coeff_table(long j_max, const KummerParams& p, const TruncationChoice& t,
                             const GTable& gtable);

// The optimally truncated dominant sum
//   x^{a-b} e^x / Gamma(a) * sum_{j<m0} (b-a)_j (1-a)_j / (j! x^j),
// all terms accumulated at working precision (the allowance covers e^x).
BigReal exp_sum_opt(const KummerParams& p, const Rational& x, const TruncationChoice& t,
                    const PrecisionPolicy& policy);

// F(x) = M(a;b;x)/Gamma(b) - exp_sum_opt: the exponentially small remainder
// left on the Stokes line after removing the dominant expansion.
BigReal residual_f(const KummerParams& p, const Rational& x, const TruncationChoice& t,
                   const PrecisionPolicy& policy);

// The analogous residual on the negative axis,
//   M(b-a;b;-x)/Gamma(b) - x^{a-b}/Gamma(a) * (same truncated sum),
// computed independently; Kummer's transform M(a;b;x) = e^x M(b-a;b;-x)
// forces e^x * negative_axis_residual == residual_f.
BigReal negative_axis_residual(const KummerParams& p, const Rational& x,
                               const TruncationChoice& t, const PrecisionPolicy& policy);

// The subdominant algebraic expansion truncated at M:
//   H_M = x^{-a}/Gamma(b-a) { cos(pi a) sum_{j<=M} (-1)^j A_j x^{-j}
//         + (2 sin(pi a)/sqrt(2 pi x)) sum_{j<=M} (-1)^j B_j x^{-j} }.
// For integer a the B sum vanishes with sin(pi a); when b-a is a nonpositive
// integer the reciprocal gamma is zero and H_M is identically zero.
BigReal algebraic_h(const KummerParams& p, const Rational& x, const TruncationChoice& t,
                    long M, const GTable& gtable, const PrecisionPolicy& policy);

struct StokesRow {
    long M = 0;
    BigReal H;
    BigReal first_omitted_A;  // magnitude of the j = M+1 term of the A sum
    BigReal first_omitted_B;  // same for the B sum (zero when B is absent)
    BigReal diff;             // |F - H_M|
};

struct StokesReport {
    KummerParams params;
    Rational x;
    TruncationChoice truncation;
    int precision_digits = 0;
    bool degenerate_reciprocal_gamma = false;  // 1/Gamma(b-a) == 0
    BigReal F;
    std::vector<StokesRow> rows;

    std::string to_json() const;
    std::string to_table() const;  // aligned columns, 11 significant digits
    std::string to_csv() const;    // M,H_M,first_omitted_A,first_omitted_B + trailing F row
};

// Assemble F and H_0..H_Mmax with per-row first-omitted-term estimates.
// Rows are computed independently of one another; output is deterministic.
StokesReport stokes_report(const KummerParams& p, const Rational& x, long m_max,
                           const GTable& gtable, const PrecisionPolicy& policy,
                           std::optional<long> m0_override = std::nullopt);

// Both sides of the terminant identity at order j: the terminant evaluated
// directly versus 1/2 - (i/sqrt(2 pi x)) sum_{k<M} (1/2)_k G_{2k}(gamma_j)
// (x/2)^{-k}; the G sum is exact rational before final rounding.
struct TerminantCheck {
    BigComplex lhs;           // T_{nu - j}(x e^{i pi})
    BigReal rhs_im;           // imaginary part of the truncated expansion
    BigReal re_diff;          // |Re lhs - 1/2|
    BigReal im_diff;          // |Im lhs - rhs_im|
    BigReal first_omitted;    // magnitude of the k = M term
};
TerminantCheck terminant_consistency(const KummerParams& p, const Rational& x,
                                     const TruncationChoice& t, long j, int M,
                                     const GTable& gtable, const PrecisionPolicy& policy);

}  // namespace stokesline
