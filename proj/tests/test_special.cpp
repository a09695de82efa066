#include <doctest.h>

#include <random>

#include "stokesline/errors.hpp"
#include "stokesline/special.hpp"

using namespace stokesline;

namespace {

BigReal ulp_scaled(const BigReal& x, long bits_back) {
    BigReal t = abs(x);
    mpfr_mul_2si(t.raw(), t.raw(), -bits_back, MPFR_RNDN);
    return t;
}

// MPFR's own gamma as an independent oracle for the Spouge evaluation
BigReal mpfr_gamma_oracle(const BigReal& x) {
    BigReal r(x.precision());
    mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

}  // namespace

TEST_SUITE("special") {

TEST_CASE("gamma at classic points") {
    const mpfr_prec_t bits = bits_for_digits(40);
    CHECK(abs(big_gamma(BigReal::from_long(1, bits)) - BigReal::from_long(1, bits)) <
          ulp_scaled(BigReal::from_long(1, bits), 120));
    CHECK(abs(big_gamma(BigReal::from_long(5, bits)) - BigReal::from_long(24, bits)) <
          ulp_scaled(BigReal::from_long(24, bits), 120));
    BigReal root_pi = sqrt(BigReal::pi(bits));
    CHECK(abs(big_gamma(BigReal::from_rational(Rational(1, 2), bits)) - root_pi) <
          ulp_scaled(root_pi, 120));
}

TEST_CASE("gamma matches the mpfr oracle at random points") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> pos(0.01, 40.0);
    std::uniform_real_distribution<double> neg(-20.0, -0.01);
    for (int digits : {20, 30, 60}) {
        const mpfr_prec_t bits = bits_for_digits(digits);
        for (int i = 0; i < 12; ++i) {
            BigReal x = BigReal::from_double(pos(rng), bits);
            BigReal got = big_gamma(x);
            BigReal want = mpfr_gamma_oracle(x);
            CHECK(abs(got - want) <= ulp_scaled(want, bits - 8));
        }
        for (int i = 0; i < 12; ++i) {
            BigReal x = BigReal::from_double(neg(rng), bits);
            if (x.is_integer()) continue;
            BigReal got = big_gamma(x);
            BigReal want = mpfr_gamma_oracle(x);
            CHECK(abs(got - want) <= ulp_scaled(want, bits - 8));
        }
    }
}

TEST_CASE("gamma recurrence in (-5, 5)") {
    const mpfr_prec_t bits = bits_for_digits(30);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    int checked = 0;
    while (checked < 20) {
        double xd = dist(rng);
        if (std::abs(xd - std::round(xd)) < 1e-3) continue;  // stay off the poles
        BigReal x = BigReal::from_double(xd, bits);
        BigReal lhs = big_gamma(x + 1);
        BigReal rhs = x * big_gamma(x);
        CHECK(abs(lhs - rhs) <= ulp_scaled(lhs, bits - 10));
        ++checked;
    }
}

TEST_CASE("gamma reflection formula") {
    const mpfr_prec_t bits = bits_for_digits(30);
    for (double xd : {0.25, 0.125, 0.75, 1.3, 2.6, -0.7}) {
        BigReal x = BigReal::from_double(xd, bits);
        BigReal lhs = big_gamma(x) * big_gamma(BigReal::from_long(1, bits) - x);
        BigReal rhs = BigReal::pi(bits) / sin_pi(x);
        CHECK(abs(lhs - rhs) <= ulp_scaled(rhs, bits - 10));
    }
}

TEST_CASE("gamma poles carry the nearest integer") {
    const mpfr_prec_t bits = 128;
    CHECK_THROWS_AS(big_gamma(BigReal::from_long(0, bits)), GammaPoleError);
    try {
        big_gamma(BigReal::from_long(-3, bits));
        FAIL("expected a pole");
    } catch (const GammaPoleError& e) {
        CHECK(e.nearest_pole == -3);
    }
}

TEST_CASE("exponential integral against a frozen value") {
    // Ei(1) to 40 digits
    const mpfr_prec_t bits = bits_for_digits(45);
    BigReal want(bits);
    mpfr_set_str(want.raw(), "1.8951178163559367554665209343316342690170605817327", 10, MPFR_RNDN);
    BigReal got = big_ei(BigReal::from_long(1, bits));
    CHECK(abs(got - want) < BigReal::from_double(1e-40, 64));
    CHECK_THROWS_AS(big_ei(BigReal::from_long(-1, bits)), InvalidInputError);
}

TEST_CASE("exact zeros of cos and sin at rational multiples of pi") {
    const mpfr_prec_t bits = 104;

    CosSinPi integer = cos_sin_pi(Rational(3), bits);
    CHECK(integer.sin_is_zero);
    CHECK(integer.sin_value.is_zero());
    CHECK(integer.cos_value == BigReal::from_long(-1, bits));

    CosSinPi even = cos_sin_pi(Rational(2), bits);
    CHECK(even.cos_value == BigReal::from_long(1, bits));

    CosSinPi half = cos_sin_pi(Rational(1, 2), bits);
    CHECK(half.cos_is_zero);
    CHECK(half.cos_value.is_zero());
    CHECK(half.sin_value == BigReal::from_long(1, bits));

    CosSinPi neg_half = cos_sin_pi(Rational(-1, 2), bits);
    CHECK(neg_half.cos_is_zero);
    CHECK(neg_half.sin_value == BigReal::from_long(-1, bits));

    CosSinPi five_half = cos_sin_pi(Rational(5, 2), bits);
    CHECK(five_half.cos_is_zero);
    CHECK(five_half.sin_value == BigReal::from_long(1, bits));
}

TEST_CASE("cos(pi/3) = 1/2 and the quadrant flips") {
    const mpfr_prec_t bits = 104;
    BigReal half = BigReal::from_rational(Rational(1, 2), bits);

    CosSinPi third = cos_sin_pi(Rational(1, 3), bits);
    CHECK(!third.cos_is_zero);
    CHECK(abs(third.cos_value - half) < ulp_scaled(half, 96));

    CosSinPi four_thirds = cos_sin_pi(Rational(4, 3), bits);
    CHECK(abs(four_thirds.cos_value + half) < ulp_scaled(half, 96));
    CHECK(four_thirds.sin_value.sign() < 0);
}

TEST_CASE("real-argument cos_pi and sin_pi") {
    const mpfr_prec_t bits = 200;
    BigReal quarter = BigReal::from_rational(Rational(1, 4), bits);
    BigReal expected = sqrt(BigReal::from_long(2, bits)) / 2;
    CHECK(abs(cos_pi(quarter) - expected) < ulp_scaled(expected, 190));
    CHECK(abs(sin_pi(quarter) - expected) < ulp_scaled(expected, 190));

    // large argument reduced by the integer part: cos(pi (10^6 + 1/2)) ~ 0
    BigReal big = BigReal::from_rational(Rational(2000001, 2), bits);
    CHECK(abs(cos_pi(big)) < BigReal::from_double(1e-55, 64));
    CHECK(abs(sin_pi(big) - BigReal::from_long(1, bits)) < BigReal::from_double(1e-55, 64));

    BigReal negative = BigReal::from_rational(Rational(-1, 2), bits);
    CHECK(abs(sin_pi(negative) + BigReal::from_long(1, bits)) < BigReal::from_double(1e-55, 64));
}

}  // TEST_SUITE
