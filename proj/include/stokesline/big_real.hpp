#pragma once

#include <mpfr.h>

#include <string>

#include "stokesline/rational.hpp"

namespace stokesline {

// Decimal <-> binary precision conversion with a small headroom so that
// "P decimal digits" round-trips safely.
mpfr_prec_t bits_for_digits(int digits);

// Arbitrary-precision real backed by MPFR.  Precision travels with the
// value: binary operations promote to the larger operand precision, so there
// is no global rounding state to configure.  All rounding is to nearest.
class BigReal {
public:
    BigReal();  // NaN at minimum precision, assign before use
    explicit BigReal(mpfr_prec_t bits);
    BigReal(const BigReal& o);
    BigReal(BigReal&& o) noexcept;
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept;
    ~BigReal();

    static BigReal from_long(long v, mpfr_prec_t bits);
    static BigReal from_rational(const Rational& q, mpfr_prec_t bits);
    static BigReal from_double(double v, mpfr_prec_t bits);
    static BigReal pi(mpfr_prec_t bits);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    // value rounded (or zero-padded) to a different precision
    BigReal at_precision(mpfr_prec_t bits) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    long to_long() const;
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Fixed or scientific decimal form with the given number of significant
    // digits (scientific once the exponent gets unwieldy).
    std::string str(int sig_digits) const;

    BigReal operator-() const;
    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    friend BigReal operator+(const BigReal& a, long b);
    friend BigReal operator-(const BigReal& a, long b);
    friend BigReal operator*(const BigReal& a, long b);
    friend BigReal operator/(const BigReal& a, long b);
    friend BigReal operator/(long a, const BigReal& b);

    BigReal& operator+=(const BigReal& b);
    BigReal& operator-=(const BigReal& b);
    BigReal& operator*=(const BigReal& b);
    BigReal& operator/=(const BigReal& b);

    // comparisons are exact on the stored values; NaN compares false
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_); }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return !mpfr_equal_p(a.v_, b.v_); }

private:
    mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);   // x > 0
BigReal pow(const BigReal& x, const BigReal& y);
BigReal cos(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal floor(const BigReal& x);

// Rectangular complex value; both parts share one precision by construction
// of all operations below.
struct BigComplex {
    BigReal re;
    BigReal im;

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator*(const BigComplex& a, const BigReal& b);
};

BigReal abs(const BigComplex& z);

// Working-precision bookkeeping.  target_digits is what the caller wants to
// read; guard_digits absorbs ordinary rounding; the per-call cancellation
// allowance covers the e^{|x|} blow-up of alternating hypergeometric sums.
struct PrecisionPolicy {
    int target_digits = 30;
    int guard_digits = 10;

    int working_digits(int cancellation_allowance = 0) const;
    mpfr_prec_t working_bits(int cancellation_allowance = 0) const;
    mpfr_prec_t target_bits() const;
};

// digits lost to cancellation when an alternating sum peaks near e^{|x|}:
// ceil(|x| log10 e) + 5
int cancellation_allowance(double x);

}  // namespace stokesline
