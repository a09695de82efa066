#include "stokesline/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <json.hpp>
#include <ostream>

#include "stokesline/errors.hpp"
#include "stokesline/kummer.hpp"
#include "stokesline/special.hpp"
#include "stokesline/stokes_coeffs.hpp"
#include "stokesline/stokes_line.hpp"
#include "stokesline/terminant.hpp"
#include "stokesline/wright.hpp"

namespace stokesline {

namespace {

constexpr int kTableDigits = 11;  // significant digits in aligned table output

Rational parse_required(const std::string& value, const char* flag) {
    if (value.empty())
        throw InvalidInputError(std::string("missing required option ") + flag);
    return rational_from_string(value);
}

void check_format(const std::string& format) {
    if (format != "table" && format != "json" && format != "csv")
        throw InvalidInputError("unknown output format '" + format +
                                "' (expected table, json or csv)");
}

// G table sized for the request: the configured depth, raised if the
// subcommand consumes higher even orders.  A cache file is used when it
// validates and is deep enough, and rewritten otherwise.
GTable acquire_g_table(const RunConfig& cfg, int k_even_needed) {
    const int k_even = std::max(cfg.K, k_even_needed);
    if (k_even < 0) throw InvalidInputError("G table depth must be nonnegative");
    if (!cfg.cache_path.empty()) {
        if (auto cached = load_g_table(cfg.cache_path); cached && cached->max_even() >= k_even)
            return *cached;
        GTable table = derive_g_table(k_even);
        save_g_table(table, cfg.cache_path);
        return table;
    }
    return derive_g_table(k_even);
}

nlohmann::json rational_json(const Rational& r) { return rational_to_string(r); }

std::string decimal(const Rational& r, int digits) {
    return BigReal::from_rational(r, bits_for_digits(digits + 2)).str(digits);
}

int cmd_coeffs(const RunConfig& cfg, std::ostream& out) {
    KummerParams p(parse_required(cfg.a, "--a"), parse_required(cfg.b, "--b"));
    if (cfg.jmax < 0) throw InvalidInputError("coeffs: --jmax must be nonnegative");

    TruncationChoice t;
    std::optional<long> m0;
    if (!cfg.alpha.empty()) {
        t.alpha = rational_from_string(cfg.alpha);
    } else if (!cfg.x.empty()) {
        t = choose_m0(p, rational_from_string(cfg.x), cfg.m0_override);
        m0 = t.m0;
    } else {
        throw InvalidInputError("coeffs: supply --alpha directly or --x to derive it");
    }

    GTable g = acquire_g_table(cfg, static_cast<int>(cfg.jmax));
    CoeffTable table = build_coeff_table(cfg.jmax, p, t, g);
    const bool have_b = !table.B.empty();

    if (cfg.format == "json") {
        nlohmann::json doc;
        doc["params"] = {{"a", rational_json(p.a)}, {"b", rational_json(p.b)}};
        doc["alpha"] = t.alpha ? rational_json(*t.alpha) : nlohmann::json(nullptr);
        doc["m0"] = m0 ? nlohmann::json(*m0) : nlohmann::json(nullptr);
        doc["jmax"] = cfg.jmax;
        doc["precision"] = cfg.precision;
        doc["rows"] = nlohmann::json::array();
        for (long j = 0; j <= cfg.jmax; ++j) {
            nlohmann::json row = {{"j", j},
                                  {"A", rational_json(table.A[j])},
                                  {"A_decimal", decimal(table.A[j], cfg.precision)}};
            if (have_b) {
                row["B"] = rational_json(table.B[j]);
                row["B_decimal"] = decimal(table.B[j], cfg.precision);
            }
            doc["rows"].push_back(row);
        }
        out << doc.dump(1) << "\n";
        return 0;
    }

    if (cfg.format == "csv") {
        out << "j,A_j,B_j\n";
        for (long j = 0; j <= cfg.jmax; ++j) {
            out << j << "," << decimal(table.A[j], cfg.precision) << ",";
            if (have_b) out << decimal(table.B[j], cfg.precision);
            out << "\n";
        }
        return 0;
    }

    out << "a = " << rational_to_string(p.a) << "  b = " << rational_to_string(p.b);
    if (t.alpha) out << "  alpha = " << rational_to_string(*t.alpha);
    if (m0) out << "  m0 = " << *m0;
    out << "\n";
    out << std::left << std::setw(4) << "j" << std::setw(20) << "A_j";
    if (have_b) out << "B_j";
    out << "\n";
    for (long j = 0; j <= cfg.jmax; ++j) {
        out << std::left << std::setw(4) << j << std::setw(20)
            << decimal(table.A[j], kTableDigits);
        if (have_b) out << decimal(table.B[j], kTableDigits);
        out << "\n";
    }
    return 0;
}

int cmd_residual(const RunConfig& cfg, std::ostream& out) {
    KummerParams p(parse_required(cfg.a, "--a"), parse_required(cfg.b, "--b"));
    Rational x = parse_required(cfg.x, "--x");
    if (cfg.M < 0) throw InvalidInputError("residual: --M must be nonnegative");

    GTable g = acquire_g_table(cfg, static_cast<int>(cfg.M) + 1);
    PrecisionPolicy policy{cfg.precision, 10};
    StokesReport report = stokes_report(p, x, cfg.M, g, policy, cfg.m0_override);
    if (cfg.format == "json")
        out << report.to_json() << "\n";
    else if (cfg.format == "csv")
        out << report.to_csv();
    else
        out << report.to_table();
    return 0;
}

int cmd_ghat(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    GTable g = acquire_g_table(cfg, 4);
    bool ok = true;
    for (int k = 0; k <= 4; ++k) {
        GhatReport report = ghat_check(g, k);
        for (const auto& m : report.mismatches) err << "ghat mismatch: " << m << "\n";
        ok = ok && report.ok;
    }
    if (!ok) return 2;
    if (cfg.format == "json")
        out << nlohmann::json({{"ok", true}, {"k_max", 4}}).dump(1) << "\n";
    else
        out << "k=0..4 verified\n";
    return 0;
}

int cmd_terminant(const RunConfig& cfg, std::ostream& out) {
    KummerParams p(parse_required(cfg.a, "--a"), parse_required(cfg.b, "--b"));
    Rational x = parse_required(cfg.x, "--x");
    if (cfg.M < 1) throw InvalidInputError("terminant: --M must be at least 1");
    if (cfg.j < 0) throw InvalidInputError("terminant: --j must be nonnegative");

    TruncationChoice t = choose_m0(p, x, cfg.m0_override);
    GTable g = acquire_g_table(cfg, static_cast<int>(cfg.M));
    PrecisionPolicy policy{cfg.precision, 10};
    TerminantCheck check =
        terminant_consistency(p, x, t, cfg.j, static_cast<int>(cfg.M), g, policy);

    if (cfg.format == "json") {
        nlohmann::json doc;
        doc["params"] = {{"a", rational_json(p.a)}, {"b", rational_json(p.b)}};
        doc["x"] = rational_json(x);
        doc["m0"] = t.m0;
        doc["alpha"] = t.alpha ? rational_json(*t.alpha) : nlohmann::json(nullptr);
        doc["j"] = cfg.j;
        doc["M"] = cfg.M;
        doc["precision"] = cfg.precision;
        doc["T_re"] = check.lhs.re.str(cfg.precision);
        doc["T_im"] = check.lhs.im.str(cfg.precision);
        doc["expansion_im"] = check.rhs_im.str(cfg.precision);
        doc["re_diff"] = check.re_diff.str(cfg.precision);
        doc["im_diff"] = check.im_diff.str(cfg.precision);
        doc["first_omitted"] = check.first_omitted.str(cfg.precision);
        out << doc.dump(1) << "\n";
        return 0;
    }
    if (cfg.format == "csv") {
        out << "T_re,T_im,expansion_im,re_diff,im_diff,first_omitted\n"
            << check.lhs.re.str(cfg.precision) << "," << check.lhs.im.str(cfg.precision) << ","
            << check.rhs_im.str(cfg.precision) << "," << check.re_diff.str(cfg.precision) << ","
            << check.im_diff.str(cfg.precision) << "," << check.first_omitted.str(cfg.precision)
            << "\n";
        return 0;
    }
    out << "a = " << rational_to_string(p.a) << "  b = " << rational_to_string(p.b)
        << "  x = " << rational_to_string(x) << "  m0 = " << t.m0;
    if (t.alpha) out << "  alpha = " << rational_to_string(*t.alpha);
    out << "  j = " << cfg.j << "  M = " << cfg.M << "\n";
    out << std::left << std::setw(22) << "T_re" << check.lhs.re.str(kTableDigits) << "\n"
        << std::left << std::setw(22) << "T_im" << check.lhs.im.str(kTableDigits) << "\n"
        << std::left << std::setw(22) << "expansion_im" << check.rhs_im.str(kTableDigits) << "\n"
        << std::left << std::setw(22) << "|T_re - 1/2|" << check.re_diff.str(4) << "\n"
        << std::left << std::setw(22) << "|T_im - expansion|" << check.im_diff.str(4) << "\n"
        << std::left << std::setw(22) << "first omitted" << check.first_omitted.str(4) << "\n";
    return 0;
}

int cmd_wright(const RunConfig& cfg, std::ostream& out) {
    WrightParams p(parse_required(cfg.alpha, "--alpha"), parse_required(cfg.beta, "--beta"),
                   parse_required(cfg.a, "--a"), parse_required(cfg.b, "--b"));
    Rational x = parse_required(cfg.x, "--x");
    if (cfg.J < 1) throw InvalidInputError("wright: --J must be at least 1");

    PrecisionPolicy policy{cfg.precision, 10};
    MultiplierEstimate est = wright_multiplier(p, x, cfg.J, policy);

    if (cfg.format == "json") {
        out << est.to_json() << "\n";
        return 0;
    }
    if (cfg.format == "csv") {
        out << "j_star,S_est,conjecture_value,abs_error_estimate\n"
            << est.j_star << "," << est.s_est.str(cfg.precision) << ","
            << est.conjecture_value.str(cfg.precision) << ","
            << est.abs_error_estimate.str(cfg.precision) << "\n";
        return 0;
    }
    out << "alpha = " << rational_to_string(p.alpha) << "  beta = " << rational_to_string(p.beta)
        << "  a = " << rational_to_string(p.a) << "  b = " << rational_to_string(p.b)
        << "  x = " << rational_to_string(x) << "\n";
    out << std::left << std::setw(22) << "j*" << est.j_star << "\n"
        << std::left << std::setw(22) << "S_est" << est.s_est.str(kTableDigits) << "\n"
        << std::left << std::setw(22) << "cos(pi a/alpha)" << est.conjecture_value.str(kTableDigits)
        << "\n"
        << std::left << std::setw(22) << "error estimate" << est.abs_error_estimate.str(4) << "\n"
        << std::left << std::setw(22) << "residual" << est.residual.str(kTableDigits) << "\n"
        << std::left << std::setw(22) << "leading algebraic"
        << est.leading_algebraic.str(kTableDigits) << "\n";
    return 0;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
    bool ok = true;
    auto report = [&](const char* name, bool pass, const std::string& detail = "") {
        out << name << ": " << (pass ? "ok" : "FAIL");
        if (!detail.empty()) out << "  (" << detail << ")";
        out << "\n";
        ok = ok && pass;
    };

    // saddle-variable series tau(w) = 1 + w + w^2/3 + w^3/36 - w^4/270 + ...
    {
        PowerSeries tau = tau_series(6);
        const Rational expect[6] = {1,           1, Rational(1, 3), Rational(1, 36),
                                    Rational(-1, 270), Rational(1, 4320)};
        bool pass = tau.all_coeffs_constant();
        for (int i = 0; pass && i < 6; ++i) pass = tau[i].coeff(0) == expect[i];
        report("saddle series coefficients", pass);
    }

    GTable g = derive_g_table(6);

    // published closed forms of 6^{2k} G_{2k}, k = 0..4
    {
        bool pass = true;
        std::string first;
        for (int k = 0; k <= 4; ++k) {
            GhatReport gr = ghat_check(g, k);
            if (!gr.ok && first.empty()) first = gr.mismatches.front();
            pass = pass && gr.ok;
        }
        report("terminant coefficient polynomials", pass, first);
    }

    PrecisionPolicy policy{cfg.precision, 10};
    KummerParams p(Rational(3, 4), Rational(1, 2));
    Rational x(20);
    TruncationChoice t = choose_m0(p, x);

    // e^x * (negative-axis residual) must reproduce the Stokes-line residual
    {
        BigReal f = residual_f(p, x, t, policy);
        BigReal fneg = negative_axis_residual(p, x, t, policy);
        BigReal ex = exp(BigReal::from_rational(
            x, bits_for_digits(policy.working_digits(cancellation_allowance(x.get_d())))));
        BigReal diff = abs(ex * fneg - f);
        BigReal tol = pow(BigReal::from_long(10, 64),
                          BigReal::from_long(2 - cfg.precision, 64)) *
                      abs(f);
        report("residual duality (a=3/4 b=1/2 x=20)", diff <= tol,
               "|e^x F(-x) - F(x)| = " + diff.str(3));
    }

    // Re T = 1/2 on the Stokes line, and the expansion matches Im T
    {
        TerminantCheck tc = terminant_consistency(p, x, t, 0, 6, g, policy);
        BigReal re_tol = pow(BigReal::from_long(10, 64), BigReal::from_long(5 - cfg.precision, 64));
        report("terminant real part", tc.re_diff <= re_tol, "|Re T - 1/2| = " + tc.re_diff.str(3));
        report("terminant expansion", tc.im_diff <= tc.first_omitted * 2,
               "|Im diff| = " + tc.im_diff.str(3) + " first omitted = " + tc.first_omitted.str(3));
    }

    // Kummer transform M(a;b;x) = e^x M(b-a;b;-x)
    {
        const mpfr_prec_t bits = policy.working_bits(cancellation_allowance(20.0));
        BigReal av = BigReal::from_rational(p.a, bits);
        BigReal bv = BigReal::from_rational(p.b, bits);
        BigReal xv = BigReal::from_long(20, bits);
        BigReal lhs = kummer_m(av, bv, xv, policy);
        BigReal rhs = exp(xv) * kummer_m(bv - av, bv, -xv, policy);
        BigReal tol = pow(BigReal::from_long(10, 64),
                          BigReal::from_long(2 - cfg.precision, 64)) *
                      abs(lhs);
        report("kummer transform", abs(lhs - rhs) <= tol);
    }

    out << (ok ? "selftest passed" : "selftest FAILED") << "\n";
    return ok ? 0 : 2;
}

}  // namespace

int precision_from_env(int fallback) {
    const char* env = std::getenv("STOKESLINE_PRECISION");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v <= 100000) return static_cast<int>(v);
    return fallback;
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        check_format(cfg.format);
        if (cfg.precision < 1) throw InvalidInputError("precision must be positive");
        if (cfg.command == "coeffs") return cmd_coeffs(cfg, out);
        if (cfg.command == "residual") return cmd_residual(cfg, out);
        if (cfg.command == "ghat") return cmd_ghat(cfg, out, err);
        if (cfg.command == "terminant") return cmd_terminant(cfg, out);
        if (cfg.command == "wright") return cmd_wright(cfg, out);
        if (cfg.command == "selftest") return cmd_selftest(cfg, out);
        throw InvalidInputError("unknown command '" + cfg.command + "'");
    } catch (const DerivationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotInvertibleError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NeedsLaurentError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const IterationLimitError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const QuadratureLimitError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace stokesline
