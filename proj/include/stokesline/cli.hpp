#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace stokesline {

// Parsed command-line request.  Numeric parameters arrive as strings and are
// converted to exact rationals ("3/4", "0.75", "20") by the subcommands, so
// parsing errors surface with the same exit discipline as domain errors.
struct RunConfig {
    std::string command;  // coeffs | residual | ghat | terminant | wright | selftest
    std::string a;
    std::string b;
    std::string x;
    std::string alpha;  // coeffs: truncation offset; wright: numerator gamma scale
    std::string beta;   // wright: denominator gamma scale
    long jmax = 6;      // coeffs: highest coefficient index
    long M = 6;         // residual: highest H index; terminant: expansion order
    long j = 0;         // terminant: shift index (gamma = alpha - j)
    int J = 40;         // wright: coefficient budget for optimal truncation
    std::optional<long> m0_override;
    int precision = 30;
    int K = 12;  // derived G-polynomial table depth (even orders)
    std::string format = "table";  // table | json | csv
    std::string cache_path;        // optional JSON cache for the G table
};

// Default precision, honouring the STOKESLINE_PRECISION environment variable
// when it holds a usable positive integer.
int precision_from_env(int fallback = 30);

// Execute one request.  Returns the process exit code: 0 on success, 1 for
// unusable input (bad parameters, degenerate configurations, truncation rule
// failures), 2 when a derivation or internal identity check fails.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace stokesline
