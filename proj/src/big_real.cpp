#include "stokesline/big_real.hpp"

#include <algorithm>
#include <cmath>

#include "stokesline/errors.hpp"

namespace stokesline {

namespace {

// log2(10) rounded up a little; 4 extra bits cover double rounding at the
// decimal boundary
constexpr double kBitsPerDigit = 3.3219280948873626;

mpfr_prec_t checked(mpfr_prec_t bits) {
    if (bits < MPFR_PREC_MIN) throw InvalidInputError("precision below MPFR minimum");
    return bits;
}

}  // namespace

mpfr_prec_t bits_for_digits(int digits) {
    if (digits <= 0) throw InvalidInputError("digit count must be positive");
    return static_cast<mpfr_prec_t>(std::ceil(digits * kBitsPerDigit)) + 4;
}

BigReal::BigReal() { mpfr_init2(v_, MPFR_PREC_MIN); }

BigReal::BigReal(mpfr_prec_t bits) { mpfr_init2(v_, checked(bits)); }

BigReal::BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));  // also clears the value
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::from_long(long v, mpfr_prec_t bits) {
    BigReal r(bits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigReal BigReal::from_rational(const Rational& q, mpfr_prec_t bits) {
    BigReal r(bits);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::from_double(double v, mpfr_prec_t bits) {
    BigReal r(bits);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

BigReal BigReal::pi(mpfr_prec_t bits) {
    BigReal r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::at_precision(mpfr_prec_t bits) const {
    BigReal r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

long BigReal::to_long() const {
    if (!is_integer() || !mpfr_fits_slong_p(v_, MPFR_RNDN))
        throw InvalidInputError("BigReal is not an integer fitting in a long");
    return mpfr_get_si(v_, MPFR_RNDN);
}

std::string BigReal::str(int sig_digits) const {
    if (sig_digits <= 0) throw InvalidInputError("need a positive digit count");
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) {
        std::string s = "0";
        if (sig_digits > 1) s += "." + std::string(sig_digits - 1, '0');
        return s;
    }

    mpfr_exp_t e;  // value = 0.digits * 10^e
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(sig_digits), v_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);

    std::string sign;
    if (digits.front() == '-') {
        sign = "-";
        digits.erase(digits.begin());
    }

    std::string body;
    if (e > 0 && e <= sig_digits + 4) {
        // fixed notation with the point inside or just past the digits
        if (static_cast<std::size_t>(e) >= digits.size())
            body = digits + std::string(static_cast<std::size_t>(e) - digits.size(), '0');
        else
            body = digits.substr(0, static_cast<std::size_t>(e)) + "." +
                   digits.substr(static_cast<std::size_t>(e));
    } else if (e <= 0 && e > -5) {
        body = "0." + std::string(static_cast<std::size_t>(-e), '0') + digits;
    } else {
        body = digits.substr(0, 1);
        if (digits.size() > 1) body += "." + digits.substr(1);
        body += "e" + std::to_string(static_cast<long>(e - 1));
    }
    return sign + body;
}

namespace {

mpfr_prec_t join(const BigReal& a, const BigReal& b) {
    return std::max(a.precision(), b.precision());
}

}  // namespace

BigReal BigReal::operator-() const {
    BigReal r(precision());
    mpfr_neg(r.raw(), v_, MPFR_RNDN);
    return r;
}

#define STOKESLINE_BINOP(op, fn)                                   \
    BigReal operator op(const BigReal& a, const BigReal& b) {      \
        BigReal r(join(a, b));                                     \
        fn(r.raw(), a.v_, b.v_, MPFR_RNDN);                        \
        return r;                                                  \
    }

STOKESLINE_BINOP(+, mpfr_add)
STOKESLINE_BINOP(-, mpfr_sub)
STOKESLINE_BINOP(*, mpfr_mul)
STOKESLINE_BINOP(/, mpfr_div)
#undef STOKESLINE_BINOP

BigReal operator+(const BigReal& a, long b) {
    BigReal r(a.precision());
    mpfr_add_si(r.raw(), a.v_, b, MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a, long b) {
    BigReal r(a.precision());
    mpfr_sub_si(r.raw(), a.v_, b, MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, long b) {
    BigReal r(a.precision());
    mpfr_mul_si(r.raw(), a.v_, b, MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, long b) {
    BigReal r(a.precision());
    mpfr_div_si(r.raw(), a.v_, b, MPFR_RNDN);
    return r;
}

BigReal operator/(long a, const BigReal& b) {
    BigReal r(b.precision());
    mpfr_si_div(r.raw(), a, b.v_, MPFR_RNDN);
    return r;
}

BigReal& BigReal::operator+=(const BigReal& b) { return *this = *this + b; }
BigReal& BigReal::operator-=(const BigReal& b) { return *this = *this - b; }
BigReal& BigReal::operator*=(const BigReal& b) { return *this = *this * b; }
BigReal& BigReal::operator/=(const BigReal& b) { return *this = *this / b; }

#define STOKESLINE_UNFUN(name, fn)              \
    BigReal name(const BigReal& x) {            \
        BigReal r(x.precision());               \
        fn(r.raw(), x.raw(), MPFR_RNDN);        \
        return r;                               \
    }

STOKESLINE_UNFUN(abs, mpfr_abs)
STOKESLINE_UNFUN(exp, mpfr_exp)
STOKESLINE_UNFUN(cos, mpfr_cos)
STOKESLINE_UNFUN(sin, mpfr_sin)
#undef STOKESLINE_UNFUN

BigReal floor(const BigReal& x) {
    BigReal r(x.precision());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

BigReal sqrt(const BigReal& x) {
    if (x.sign() < 0) throw InvalidInputError("sqrt of a negative value");
    BigReal r(x.precision());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal log(const BigReal& x) {
    if (x.sign() <= 0) throw InvalidInputError("log needs a positive argument");
    BigReal r(x.precision());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
    BigReal r(join(x, y));
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator*(const BigComplex& a, const BigReal& b) {
    return {a.re * b, a.im * b};
}

BigReal abs(const BigComplex& z) {
    return sqrt(z.re * z.re + z.im * z.im);
}

int PrecisionPolicy::working_digits(int allowance) const {
    if (target_digits <= 0 || guard_digits < 0 || allowance < 0)
        throw InvalidInputError("bad precision policy");
    return target_digits + guard_digits + allowance;
}

mpfr_prec_t PrecisionPolicy::working_bits(int allowance) const {
    return bits_for_digits(working_digits(allowance));
}

mpfr_prec_t PrecisionPolicy::target_bits() const {
    return bits_for_digits(target_digits);
}

int cancellation_allowance(double x) {
    return static_cast<int>(std::ceil(std::abs(x) * 0.43429448190325176)) + 5;
}

}  // namespace stokesline
