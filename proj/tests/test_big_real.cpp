#include <doctest.h>

#include "stokesline/big_real.hpp"
#include "stokesline/errors.hpp"

using namespace stokesline;

TEST_SUITE("big_real") {

TEST_CASE("construction and conversions") {
    BigReal x = BigReal::from_long(-42, 64);
    CHECK(x.precision() == 64);
    CHECK(x.sign() < 0);
    CHECK(x.is_integer());
    CHECK(x.to_long() == -42);
    CHECK(x.to_double() == -42.0);

    BigReal q = BigReal::from_rational(Rational(3, 4), 64);
    CHECK(q == BigReal::from_double(0.75, 64));  // exactly representable both ways

    CHECK(BigReal().is_nan());
    CHECK(!(BigReal() == BigReal()));  // NaN never compares equal
}

TEST_CASE("binary operations promote to the larger precision") {
    BigReal lo = BigReal::from_long(1, 64);
    BigReal hi = BigReal::from_long(1, 200);
    CHECK((lo + hi).precision() == 200);
    CHECK((hi * lo).precision() == 200);
    CHECK((lo / hi).precision() == 200);
    CHECK(lo.at_precision(128).precision() == 128);
}

TEST_CASE("arithmetic identities at high precision") {
    const mpfr_prec_t bits = 300;
    BigReal two = BigReal::from_long(2, bits);
    BigReal r = sqrt(two);
    BigReal err = abs(r * r - two);
    BigReal tol = BigReal::from_long(1, bits);
    mpfr_mul_2si(tol.raw(), tol.raw(), -290, MPFR_RNDN);
    CHECK(err < tol);

    BigReal e1 = exp(BigReal::from_long(1, bits));
    CHECK(abs(log(e1) - BigReal::from_long(1, bits)) < tol);

    CHECK(abs(sin(BigReal::pi(bits))) < tol);
    CHECK(abs(cos(BigReal::pi(bits)) + BigReal::from_long(1, bits)) < tol);

    CHECK(floor(BigReal::from_double(2.7, bits)).to_long() == 2);
    CHECK(floor(BigReal::from_double(-2.7, bits)).to_long() == -3);

    BigReal p = pow(BigReal::from_long(2, bits), BigReal::from_long(10, bits));
    CHECK(p == BigReal::from_long(1024, bits));
}

TEST_CASE("decimal formatting") {
    const mpfr_prec_t bits = 200;
    CHECK(BigReal::from_long(0, bits).str(4) == "0.000");
    CHECK(BigReal::from_rational(Rational(1, 400), bits).str(4) == "0.002500");
    CHECK(BigReal::from_rational(Rational(1, 3), bits).str(5) == "0.33333");
    CHECK(BigReal::from_long(20, bits).str(5) == "20.000");
    CHECK(BigReal::from_rational(Rational(-3, 4), bits).str(3) == "-0.750");
    CHECK(BigReal::from_rational(Rational(1, 1000000000), bits).str(4) == "1.000e-9");
    CHECK(BigReal::from_rational(Rational(15432, 125), bits).str(6) == "123.456");
    CHECK_THROWS_AS(BigReal::from_long(1, bits).str(0), InvalidInputError);
}

TEST_CASE("complex rectangle arithmetic") {
    const mpfr_prec_t bits = 64;
    BigComplex u{BigReal::from_long(1, bits), BigReal::from_long(2, bits)};
    BigComplex v{BigReal::from_long(3, bits), BigReal::from_long(4, bits)};
    BigComplex w = u * v;
    CHECK(w.re == BigReal::from_long(-5, bits));
    CHECK(w.im == BigReal::from_long(10, bits));
    CHECK(abs(BigComplex{BigReal::from_long(3, bits), BigReal::from_long(4, bits)}) ==
          BigReal::from_long(5, bits));
    BigComplex s = u + v;
    CHECK(s.re == BigReal::from_long(4, bits));
    CHECK(s.im == BigReal::from_long(6, bits));
}

TEST_CASE("precision policy accounting") {
    PrecisionPolicy policy{30, 10};
    CHECK(policy.working_digits() == 40);
    CHECK(policy.working_digits(14) == 54);
    CHECK(policy.working_bits() == bits_for_digits(40));
    CHECK(policy.target_bits() == bits_for_digits(30));
    CHECK(bits_for_digits(30) == 104);
    CHECK(cancellation_allowance(0.0) == 5);
    CHECK(cancellation_allowance(20.0) == 14);
    CHECK(cancellation_allowance(-20.0) == 14);
    CHECK_THROWS_AS((PrecisionPolicy{-1, 10}.working_digits()), InvalidInputError);
    CHECK_THROWS_AS(bits_for_digits(0), InvalidInputError);
}

}  // TEST_SUITE
