#include <doctest.h>

#include <json.hpp>
#include <string>

#include "stokesline/errors.hpp"
#include "stokesline/stokes_line.hpp"

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

const GTable& shared_g_table() {
    static GTable table = derive_g_table(8);
    return table;
}

}  // namespace

TEST_SUITE("stokes_line") {

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(KummerParams(Rational(0), Rational(1)), InvalidInputError);
    CHECK_THROWS_AS(KummerParams(Rational(-2), Rational(1)), InvalidInputError);
    CHECK_THROWS_AS(KummerParams(Rational(1, 2), Rational(-1)), InvalidInputError);
    CHECK(KummerParams(Rational(2), Rational(3)).integer_a());
    CHECK(!KummerParams(Rational(1, 3), Rational(1)).integer_a());
}

TEST_CASE("dominant-series coefficients A_j") {
    // closed forms for the four parameter sets used throughout
    KummerParams p1(Rational(3, 4), Rational(1, 2));
    CHECK(coeff_a(0, p1) == 1);
    CHECK(coeff_a(1, p1) == Rational(15, 16));
    CHECK(coeff_a(2, p1) == Rational(945, 512));
    CHECK(coeff_a(3, p1) == Rational(45045, 8192));

    KummerParams p2(Rational(1, 3), Rational(1));
    CHECK(coeff_a(1, p2) == Rational(1, 9));
    CHECK(coeff_a(2, p2) == Rational(8, 81));
    CHECK(coeff_a(3, p2) == Rational(392, 2187));

    // 1 + a - b a nonpositive integer truncates the sequence
    KummerParams p3(Rational(-3, 4), Rational(5, 4));
    CHECK(coeff_a(1, p3) == Rational(3, 4));
    CHECK(coeff_a(2, p3) == 0);
    CHECK(coeff_a(3, p3) == 0);

    // recurrence A_{j+1} = A_j (a+j)(1+a-b+j)/(j+1)
    KummerParams p4(Rational(1, 2), Rational(5, 4));
    Rational a_prev = coeff_a(0, p4);
    for (long j = 0; j < 30; ++j) {
        Rational expect = a_prev * (p4.a + j) * (1 + p4.a - p4.b + j) / Rational(j + 1);
        Rational got = coeff_a(j + 1, p4);
        CHECK(got == expect);
        a_prev = got;
    }
}

TEST_CASE("optimal truncation rule on the reference parameter sets") {
    Rational x(20);

    TruncationChoice c1 = choose_m0(KummerParams(Rational(3, 4), Rational(1, 2)), x);
    CHECK(c1.m0 == 21);
    REQUIRE(c1.alpha.has_value());
    CHECK(*c1.alpha == 0);
    CHECK(!c1.used_override);

    TruncationChoice c2 = choose_m0(KummerParams(Rational(1, 2), Rational(5, 4)), x);
    CHECK(c2.m0 == 20);
    CHECK(*c2.alpha == Rational(1, 4));

    TruncationChoice c3 = choose_m0(KummerParams(Rational(-3, 4), Rational(5, 4)), x);
    CHECK(c3.m0 == 18);
    CHECK(*c3.alpha == Rational(3, 4));

    TruncationChoice c4 = choose_m0(KummerParams(Rational(1, 3), Rational(1)), x);
    CHECK(c4.m0 == 20);
    CHECK(*c4.alpha == Rational(1, 3));

    TruncationChoice c5 = choose_m0(KummerParams(Rational(1, 3), Rational(1)), Rational(30));
    CHECK(c5.m0 == 30);
    CHECK(*c5.alpha == Rational(1, 3));
}

TEST_CASE("truncation override and edge cases") {
    KummerParams p(Rational(1, 2), Rational(5, 4));
    TruncationChoice t = choose_m0(p, Rational(20), 19);
    CHECK(t.m0 == 19);
    CHECK(t.used_override);
    CHECK(*t.alpha == Rational(-3, 4));
    CHECK(t.gamma_of(2) == Rational(-11, 4));

    // an override that cannot reach |alpha| < 1
    CHECK_THROWS_AS(choose_m0(p, Rational(20), 35), TruncationError);

    // integer a: the dominant series terminates at m0 = a, no alpha
    TruncationChoice ti = choose_m0(KummerParams(Rational(2), Rational(3)), Rational(20));
    CHECK(ti.m0 == 2);
    CHECK(!ti.alpha.has_value());
    CHECK_THROWS_AS(ti.gamma_of(0), InvalidInputError);

    // outside the asymptotic regime
    CHECK_THROWS_AS(choose_m0(p, Rational(3)), InvalidInputError);
}

TEST_CASE("subdominant coefficients B_j in closed form") {
    const GTable& g = shared_g_table();

    // shift-polynomial values feeding the B sums
    CHECK(g.even(1).eval(Rational(1, 3)) == Rational(-7, 1620));
    CHECK(g.even(1).eval(Rational(0)) == Rational(23, 270));
    CHECK(g.even(2).eval(Rational(1, 3)) == Rational(-377, 163296));

    struct Case {
        Rational a, b, alpha;
        Rational b0, b1, b2, b3;
    };
    const Case cases[] = {
        {Rational(3, 4), Rational(1, 2), Rational(0), Rational(2, 3), Rational(3191, 2160),
         Rational(5797, 1512), Rational(929676149, 69672960)},
        {Rational(1, 2), Rational(5, 4), Rational(-3, 4), Rational(17, 12),
         Rational(-7727, 17280), Rational(4143583, 7741440), Rational(553595017, 2229534720)},
        {Rational(-3, 4), Rational(5, 4), Rational(3, 4), Rational(-1, 12),
         Rational(12163, 17280), Rational(-1273927, 7741440), Rational(114805219, 2229534720)},
        {Rational(1, 3), Rational(1), Rational(1, 3), Rational(1, 3), Rational(247, 1620),
         Rational(124937, 816480), Rational(2075071, 5878656)},
    };
    for (const auto& c : cases) {
        KummerParams p(c.a, c.b);
        TruncationChoice t;
        t.alpha = c.alpha;
        CHECK(coeff_b_exact(0, p, t, g) == c.b0);
        CHECK(coeff_b_exact(1, p, t, g) == c.b1);
        CHECK(coeff_b_exact(2, p, t, g) == c.b2);
        CHECK(coeff_b_exact(3, p, t, g) == c.b3);
        // B_0 = 2/3 - alpha always
        CHECK(coeff_b_exact(0, p, t, g) == Rational(2, 3) - c.alpha);
    }
}

TEST_CASE("deeper derived tables leave the coefficients unchanged") {
    KummerParams p(Rational(1, 3), Rational(1));
    TruncationChoice t;
    t.alpha = Rational(1, 3);
    GTable g6 = derive_g_table(6);
    GTable g12 = derive_g_table(12);
    CoeffTable shallow = build_coeff_table(6, p, t, g6);
    CoeffTable deep = build_coeff_table(6, p, t, g12);
    CHECK(shallow.A == deep.A);
    CHECK(shallow.B == deep.B);
}

TEST_CASE("coefficient table for integer a has no B column") {
    KummerParams p(Rational(2), Rational(3));
    TruncationChoice t = choose_m0(p, Rational(20));
    CoeffTable table = build_coeff_table(4, p, t, shared_g_table());
    CHECK(table.A.size() == 5);
    CHECK(table.B.empty());
    CHECK(table.A[0] == 1);
    for (int j = 1; j <= 4; ++j) CHECK(table.A[j] == 0);
}

TEST_CASE("residual matches frozen independent values") {
    struct Case {
        Rational a, b, x;
        std::optional<long> m0;
        const char* f;
        int tol_exp;
    };
    const Case cases[] = {
        {Rational(3, 4), Rational(1, 2), Rational(20), std::nullopt,
         "0.01296444571752223563877", -21},
        {Rational(1, 2), Rational(5, 4), Rational(20), 19, "0.04689120311147992260391", -21},
        {Rational(-3, 4), Rational(5, 4), Rational(20), std::nullopt, "-6.29471013739611736772",
         -18},
        {Rational(1, 3), Rational(1), Rational(20), std::nullopt, "0.1490119042702929471358",
         -20},
        {Rational(1, 3), Rational(1), Rational(30), std::nullopt, "0.1282527326447821414915",
         -20},
    };
    PrecisionPolicy policy{30, 10};
    for (const auto& c : cases) {
        CAPTURE(c.f);
        KummerParams p(c.a, c.b);
        TruncationChoice t = choose_m0(p, c.x, c.m0);
        BigReal f = residual_f(p, c.x, t, policy);
        CHECK(abs(f - parse(c.f, bits_for_digits(30))) < pow10(c.tol_exp));
    }
}

TEST_CASE("negative-axis residual reproduces the Stokes-line residual") {
    // e^x F_-(x) = F(x), an independent route through M(b-a;b;-x)
    struct Case {
        Rational a, b;
        std::optional<long> m0;
    };
    const Case cases[] = {
        {Rational(3, 4), Rational(1, 2), std::nullopt},
        {Rational(1, 2), Rational(5, 4), 19},
        {Rational(-3, 4), Rational(5, 4), std::nullopt},
    };
    PrecisionPolicy policy{30, 10};
    Rational x(20);
    for (const auto& c : cases) {
        KummerParams p(c.a, c.b);
        TruncationChoice t = choose_m0(p, x, c.m0);
        BigReal f = residual_f(p, x, t, policy);
        BigReal fneg = negative_axis_residual(p, x, t, policy);
        BigReal ex = exp(BigReal::from_rational(x, bits_for_digits(60)));
        CHECK(abs(ex * fneg - f) < pow10(-28) * abs(f));
    }
}

TEST_CASE("expansion rows close in on the residual") {
    PrecisionPolicy policy{30, 10};
    KummerParams p(Rational(1, 3), Rational(1));

    for (long xv : {20L, 30L}) {
        CAPTURE(xv);
        StokesReport r = stokes_report(p, Rational(xv), 6, shared_g_table(), policy);
        REQUIRE(r.rows.size() == 7);
        for (int m = 1; m <= 5; ++m) {
            CAPTURE(m);
            CHECK(r.rows[m].diff <= r.rows[m - 1].diff);
        }
        BigReal scale = abs(r.F);
        if (scale < BigReal::from_long(1, 64)) scale = BigReal::from_long(1, 64);
        // the x = 20 tail sits on its intrinsic truncation floor near 8e-9;
        // by x = 30 the floor is through the 1e-9 target
        CHECK(r.rows[6].diff < (xv == 20 ? pow10(-8) : pow10(-9)) * scale);
    }
}

TEST_CASE("six-term truncation reaches 1e-9 for x >= 30") {
    PrecisionPolicy policy{30, 10};
    const Rational abs_cases[][2] = {
        {Rational(3, 4), Rational(1, 2)},
        {Rational(1, 2), Rational(5, 4)},
        {Rational(-3, 4), Rational(5, 4)},
    };
    for (const auto& c : abs_cases) {
        KummerParams p(c[0], c[1]);
        for (long xv : {30L, 40L}) {
            CAPTURE(rational_to_string(c[0]));
            CAPTURE(xv);
            StokesReport r = stokes_report(p, Rational(xv), 6, shared_g_table(), policy);
            BigReal scale = abs(r.F);
            if (scale < BigReal::from_long(1, 64)) scale = BigReal::from_long(1, 64);
            CHECK(r.rows[6].diff <= pow10(-9) * scale);
        }
    }
}

TEST_CASE("integer a: the expansion is exact and purely algebraic") {
    PrecisionPolicy policy{30, 10};
    KummerParams p(Rational(2), Rational(3));
    StokesReport r = stokes_report(p, Rational(20), 3, shared_g_table(), policy);
    CHECK(!r.truncation.alpha.has_value());
    CHECK(!r.degenerate_reciprocal_gamma);
    BigReal expected = BigReal::from_rational(Rational(1, 400), bits_for_digits(40));
    for (const auto& row : r.rows) {
        CHECK(abs(row.H - expected) < pow10(-30));
        CHECK(row.first_omitted_A.is_zero());  // A_j = 0 for j >= 1 here
        CHECK(row.first_omitted_B.is_zero());  // no B sum without alpha
        CHECK(row.diff < pow10(-30));
    }
}

TEST_CASE("vanishing reciprocal gamma flags the report and zeroes H") {
    PrecisionPolicy policy{30, 10};
    KummerParams p(Rational(5, 4), Rational(1, 4));  // b - a = -1
    StokesReport r = stokes_report(p, Rational(20), 2, shared_g_table(), policy);
    CHECK(r.degenerate_reciprocal_gamma);
    for (const auto& row : r.rows) {
        CHECK(row.H.is_zero());
        CHECK(row.first_omitted_A.is_zero());
        CHECK(row.first_omitted_B.is_zero());
    }
}

TEST_CASE("report serialization") {
    PrecisionPolicy policy{20, 10};
    KummerParams p(Rational(3, 4), Rational(1, 2));
    StokesReport r = stokes_report(p, Rational(20), 2, shared_g_table(), policy);

    nlohmann::json doc = nlohmann::json::parse(r.to_json());
    CHECK(doc["params"]["a"] == "3/4");
    CHECK(doc["params"]["b"] == "1/2");
    CHECK(doc["x"] == "20");
    CHECK(doc["m0"] == 21);
    CHECK(doc["alpha"] == "0");
    CHECK(doc["m0_overridden"] == false);
    CHECK(doc["precision"] == 20);
    CHECK(doc["degenerate_reciprocal_gamma"] == false);
    CHECK(doc["rows"].size() == 3);
    CHECK(doc["rows"][0]["M"] == 0);
    CHECK(doc["rows"][1].contains("H"));
    CHECK(doc["rows"][1].contains("first_omitted_A"));
    CHECK(doc["rows"][1].contains("first_omitted_B"));
    CHECK(doc.contains("F"));

    std::string csv = r.to_csv();
    CHECK(csv.rfind("M,H_M,first_omitted_A,first_omitted_B\n", 0) == 0);
    CHECK(csv.find("\nF,") != std::string::npos);

    std::string table = r.to_table();
    CHECK(table.find("m0 = 21") != std::string::npos);
    CHECK(table.find("alpha = 0") != std::string::npos);

    // overridden truncation is recorded
    StokesReport r19 = stokes_report(KummerParams(Rational(1, 2), Rational(5, 4)), Rational(20),
                                     0, shared_g_table(), policy, 19);
    nlohmann::json doc19 = nlohmann::json::parse(r19.to_json());
    CHECK(doc19["m0"] == 19);
    CHECK(doc19["alpha"] == "-3/4");
    CHECK(doc19["m0_overridden"] == true);
}

TEST_CASE("terminant expansion consistency at alpha = 0") {
    PrecisionPolicy policy{30, 10};
    KummerParams p(Rational(3, 4), Rational(1, 2));
    Rational x(20);
    TruncationChoice t = choose_m0(p, x);
    REQUIRE(*t.alpha == 0);

    TerminantCheck six = terminant_consistency(p, x, t, 0, 6, shared_g_table(), policy);
    CHECK(six.re_diff < pow10(-6));
    CHECK(six.im_diff <= six.first_omitted * 2);

    TerminantCheck five = terminant_consistency(p, x, t, 0, 5, shared_g_table(), policy);
    CHECK(five.im_diff > six.im_diff);

    // deeper shifts stay consistent as long as nu - j remains positive
    TerminantCheck shifted = terminant_consistency(p, x, t, 3, 6, shared_g_table(), policy);
    CHECK(shifted.im_diff <= shifted.first_omitted * 2);

    CHECK_THROWS_AS(terminant_consistency(p, x, t, 0, 0, shared_g_table(), policy),
                    InvalidInputError);
}

}  // TEST_SUITE
