#include <CLI11.hpp>
#include <iostream>
#include <vector>

#include "stokesline/cli.hpp"

int main(int argc, char** argv) {
    stokesline::RunConfig cfg;
    cfg.precision = stokesline::precision_from_env(cfg.precision);

    CLI::App app{
        "Exponentially improved Stokes-line evaluation of the confluent hypergeometric "
        "function, with a Wright-function multiplier probe"};
    app.require_subcommand(1);

    long m0_value = 0;
    std::vector<CLI::Option*> m0_options;
    auto add_output_options = [&](CLI::App* sub) {
        sub->add_option("--precision", cfg.precision, "target significant digits");
        sub->add_option("--K", cfg.K, "derived coefficient table depth (even orders)");
        sub->add_option("--format", cfg.format, "output format: table, json or csv");
        sub->add_option("--cache", cfg.cache_path, "JSON cache path for the derived table");
    };

    CLI::App* coeffs =
        app.add_subcommand("coeffs", "exact expansion coefficients A_j and B_j");
    coeffs->add_option("--a", cfg.a, "first parameter (rational: p/q or decimal)");
    coeffs->add_option("--b", cfg.b, "second parameter (rational)");
    coeffs->add_option("--alpha", cfg.alpha, "truncation offset, given directly");
    coeffs->add_option("--x", cfg.x, "derive the offset from the optimal truncation at x");
    coeffs->add_option("--jmax", cfg.jmax, "highest coefficient index");
    m0_options.push_back(coeffs->add_option("--m0", m0_value, "override the truncation index"));
    add_output_options(coeffs);

    CLI::App* residual = app.add_subcommand(
        "residual", "exponentially small remainder F and its expansion H_0..H_M");
    residual->add_option("--a", cfg.a, "first parameter (rational)");
    residual->add_option("--b", cfg.b, "second parameter (rational)");
    residual->add_option("--x", cfg.x, "evaluation point on the Stokes line (rational)");
    residual->add_option("--M", cfg.M, "highest expansion order");
    m0_options.push_back(residual->add_option("--m0", m0_value, "override the truncation index"));
    add_output_options(residual);

    CLI::App* ghat = app.add_subcommand(
        "ghat", "verify the derived coefficient polynomials against their closed forms");
    add_output_options(ghat);

    CLI::App* terminant = app.add_subcommand(
        "terminant", "terminant value versus its coefficient expansion on the Stokes line");
    terminant->add_option("--a", cfg.a, "first parameter (rational)");
    terminant->add_option("--b", cfg.b, "second parameter (rational)");
    terminant->add_option("--x", cfg.x, "evaluation point (rational)");
    terminant->add_option("--j", cfg.j, "shift index (expansion uses gamma = alpha - j)");
    terminant->add_option("--M", cfg.M, "number of expansion terms");
    m0_options.push_back(terminant->add_option("--m0", m0_value, "override the truncation index"));
    add_output_options(terminant);

    CLI::App* wright = app.add_subcommand(
        "wright", "Stokes-multiplier estimate for the generalized Wright series");
    wright->add_option("--alpha", cfg.alpha, "numerator gamma scale (rational)");
    wright->add_option("--beta", cfg.beta, "denominator gamma scale (rational)");
    wright->add_option("--a", cfg.a, "numerator gamma shift (rational)");
    wright->add_option("--b", cfg.b, "denominator gamma shift (rational)");
    wright->add_option("--x", cfg.x, "evaluation point on the positive axis (rational)");
    wright->add_option("--J", cfg.J, "coefficient budget for the optimal truncation");
    add_output_options(wright);

    CLI::App* selftest =
        app.add_subcommand("selftest", "run the built-in consistency checks");
    add_output_options(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    for (const CLI::Option* opt : m0_options)
        if (opt->count() > 0) cfg.m0_override = m0_value;

    return stokesline::run_command(cfg, std::cout, std::cerr);
}
