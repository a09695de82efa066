#include <doctest.h>

#include "stokesline/errors.hpp"
#include "stokesline/terminant.hpp"

using namespace stokesline;

namespace {

BigReal parse(const char* s, mpfr_prec_t bits) {
    BigReal r(bits);
    mpfr_set_str(r.raw(), s, 10, MPFR_RNDN);
    return r;
}

BigReal pow10(int e) {
    return pow(BigReal::from_long(10, 64), BigReal::from_long(e, 64));
}

}  // namespace

TEST_SUITE("terminant") {

TEST_CASE("frozen values at x = 20") {
    // computed independently from the incomplete gamma on the upper side of
    // the cut at 40 digits
    struct Frozen {
        const char* nu;
        const char* im;
    };
    const Frozen table[] = {
        {"20", "-0.05985241472868047880102076"},
        {"20.25", "-0.03721073356370754264031434"},
        {"19.25", "-0.1298424398773858475131914"},
        {"20.75", "0.007506247994825838244390439"},
    };
    PrecisionPolicy policy{30, 10};
    const mpfr_prec_t bits = bits_for_digits(40);
    BigReal x = BigReal::from_long(20, bits);
    for (const auto& f : table) {
        CAPTURE(f.nu);
        BigComplex t = terminant_on_stokes(parse(f.nu, bits), x, policy);
        CHECK(abs(t.re - BigReal::from_rational(Rational(1, 2), bits)) < pow10(-24));
        CHECK(abs(t.im - parse(f.im, bits)) < pow10(-24));
    }
}

TEST_CASE("real part is one half across orders") {
    PrecisionPolicy policy{30, 10};
    const mpfr_prec_t bits = bits_for_digits(40);
    BigReal half = BigReal::from_rational(Rational(1, 2), bits);
    for (const char* nu : {"5", "12.5", "20", "33.125", "7.25"}) {
        for (long xv : {10, 20, 35}) {
            CAPTURE(nu);
            CAPTURE(xv);
            BigComplex t = terminant_on_stokes(parse(nu, bits), BigReal::from_long(xv, bits), policy);
            CHECK(abs(t.re - half) < pow10(-25));
        }
    }
}

TEST_CASE("integer and nearby non-integer routes are continuous") {
    // nu = 20 goes through the exponential-integral route, nu = 20 +- 1/32
    // through the reflection route; the function is smooth in nu, so the
    // values must bracket each other closely
    PrecisionPolicy policy{30, 10};
    const mpfr_prec_t bits = bits_for_digits(40);
    BigReal x = BigReal::from_long(20, bits);
    BigReal at = terminant_on_stokes(BigReal::from_long(20, bits), x, policy).im;
    BigReal below = terminant_on_stokes(parse("19.96875", bits), x, policy).im;
    BigReal above = terminant_on_stokes(parse("20.03125", bits), x, policy).im;
    CHECK(abs(at - (below + above) / 2) < abs(above - below));
    CHECK(((below < at && at < above) || (above < at && at < below)));
}

TEST_CASE("near-integer orders are rejected") {
    PrecisionPolicy policy{30, 10};
    const mpfr_prec_t bits = bits_for_digits(40);
    BigReal x = BigReal::from_long(20, bits);
    BigReal nu = BigReal::from_long(20, bits) + BigReal::from_double(1e-12, bits);
    CHECK_THROWS_AS(terminant_on_stokes(nu, x, policy), ParameterDegenerateError);
}

TEST_CASE("rejects nonpositive order and argument") {
    PrecisionPolicy policy{30, 10};
    const mpfr_prec_t bits = 128;
    CHECK_THROWS_AS(
        terminant_on_stokes(BigReal::from_long(-1, bits), BigReal::from_long(20, bits), policy),
        InvalidInputError);
    CHECK_THROWS_AS(
        terminant_on_stokes(BigReal::from_long(20, bits), BigReal::from_long(-3, bits), policy),
        InvalidInputError);
}

TEST_CASE("raising the target precision refines the value") {
    const mpfr_prec_t bits = bits_for_digits(80);
    BigReal nu = parse("20.25", bits);
    BigReal x = BigReal::from_long(20, bits);
    BigReal lo = terminant_on_stokes(nu, x, PrecisionPolicy{25, 10}).im;
    BigReal hi = terminant_on_stokes(nu, x, PrecisionPolicy{60, 10}).im;
    CHECK(abs(lo - hi) < pow10(-25));
}

}  // TEST_SUITE
