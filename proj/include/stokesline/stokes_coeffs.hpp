#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stokesline/power_series.hpp"

namespace stokesline {

// tau(w): functional inverse of (1/2)w^2 = tau - log tau - 1 on the branch
// behaving like tau - 1 near w = 0 (DLMF 8.11-style saddle variable).  The
// leading coefficients are 1, 1, 1/3, 1/36, -1/270, 1/4320, ...
PowerSeries tau_series(int order);

// Coefficients G_k(g) of the simple-pole expansion
//   tau^{g-1}/(1 - tau) * dtau/dw = -1/w + sum_{k>=0} G_k(g) w^k,
// as exact polynomials in the shift symbol g.  The w^{-1} coefficient is
// checked to be exactly -1; anything else aborts the derivation.
std::vector<GammaPoly> g_polys(int K);

// Derived coefficient table.  g[k] holds G_k(g); only even orders enter the
// Stokes-line B coefficients, the odd ones are kept for cross-checks.
struct GTable {
    std::vector<GammaPoly> g;

    // largest k such that G_{2k} is present
    int max_even() const { return g.empty() ? -1 : (static_cast<int>(g.size()) - 1) / 2; }
    const GammaPoly& even(int k) const;  // G_{2k}
};

// derive G_0 .. G_{2*k_even} from scratch
GTable derive_g_table(int k_even);

struct GhatReport {
    bool ok = true;
    // differing monomials, e.g. "G_6: coefficient of g^0 is ... expected ..."
    std::vector<std::string> mismatches;
};

// Compare 6^{2k} G_{2k}(g) against the published closed-form polynomials,
// available for k = 0..4 (the k = 3 constant is the corrected -3626; the
// original printing had a typo).  Returns ok = false with a list of the
// differing monomials on mismatch.
GhatReport ghat_check(const GTable& table, int k);

// reference polynomial 6^{2k} G_{2k}(g) for k = 0..4
GammaPoly ghat_reference(int k);

// JSON cache for the derived polynomials:
//   {"format": 1, "gpolys": [{"k": 0, "coeffs": ["2/3", "-1"]}, ...]}
void save_g_table(const GTable& table, const std::string& path);

// Returns the cached table only if the file parses, has the expected format
// version, and passes ghat_check for k = 0..4.  Anything suspicious yields
// nullopt so the caller rebuilds from scratch.
std::optional<GTable> load_g_table(const std::string& path);

}  // namespace stokesline
