#include "stokesline/stokes_coeffs.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stokesline/errors.hpp"

namespace stokesline {

PowerSeries tau_series(int order) {
    if (order < 2) throw InvalidInputError("tau_series needs order >= 2");
    // Write tau = 1 + s.  Then tau - log tau - 1 = s - log(1+s) =
    // s^2 * q(s)/2 with q(s) = sum_k 2(-1)^k s^k/(k+2), q(0) = 1.  The branch
    // with w ~ s near 0 is w = s sqrt(q(s)); revert that to get s(w).
    PowerSeries q(order);
    // divide rather than use the two-argument constructor: mpq_class(n, d)
    // does not canonicalize and 2/(k+2) is not in lowest terms for even k
    for (int k = 0; k < order; ++k)
        q.set(k, GammaPoly(Rational(2 * (k % 2 == 0 ? 1 : -1)) / Rational(k + 2)));
    PowerSeries root = ps_pow(q, GammaPoly(Rational(1, 2)));

    PowerSeries w_of_s(order);  // s * sqrt(q(s))
    for (int i = 1; i < order; ++i) w_of_s.set(i, root[i - 1]);

    PowerSeries s_of_w = ps_revert(w_of_s);
    PowerSeries tau = s_of_w;
    tau.set(0, GammaPoly(1));
    return tau;
}

std::vector<GammaPoly> g_polys(int K) {
    if (K < 0) throw InvalidInputError("g_polys needs K >= 0");
    // Order budget: the Laurent division below consumes three orders (one
    // for the derivative, one for the pole, one for the tail shift).
    const int order = K + 4;
    PowerSeries tau = tau_series(order);

    PowerSeries shifted = ps_pow(tau, GammaPoly::from_coeffs({Rational(-1), Rational(1)}));
    PowerSeries numer = shifted * tau.derivative();

    PowerSeries one_minus_tau = -tau;
    one_minus_tau.set(0, GammaPoly());  // 1 - tau = -(tau - 1)

    LaurentSeries f = LaurentSeries::divide(numer, one_minus_tau);
    if (!(f.pole_coeff() == GammaPoly(-1)))
        throw DerivationError("pole coefficient of the G expansion is " +
                              f.pole_coeff().str() + ", expected -1");

    std::vector<GammaPoly> g;
    g.reserve(K + 1);
    for (int k = 0; k <= K; ++k) g.push_back(f.tail()[k]);
    return g;
}

const GammaPoly& GTable::even(int k) const {
    if (k < 0 || 2 * k >= static_cast<int>(g.size()))
        throw NeedsMoreCoefficientsError(
            "G_" + std::to_string(2 * k) + " not derived; need K >= " + std::to_string(2 * k),
            2 * k);
    return g[static_cast<std::size_t>(2 * k)];
}

GTable derive_g_table(int k_even) {
    if (k_even < 0) throw InvalidInputError("derive_g_table needs k_even >= 0");
    return GTable{g_polys(2 * k_even)};
}

GammaPoly ghat_reference(int k) {
    auto scaled = [](std::vector<long> nums, long den) {
        std::vector<Rational> c;
        c.reserve(nums.size());
        // divide rather than use the two-argument constructor: mpq_class(n, d)
        // does not canonicalize and these tables are not coprime entry-wise
        for (long n : nums) c.emplace_back(Rational(n) / Rational(den));
        return GammaPoly::from_coeffs(std::move(c));
    };
    switch (k) {
        case 0:
            return scaled({2, -3}, 3);
        case 1:
            return scaled({46, -225, 270, -90}, 15);
        case 2:
            return scaled({230, -3969, 11340, -11760, 5040, -756}, 70);
        case 3:
            // constant term -3626: the historical printing said -3226
            return scaled({-3626, -17781, 183330, -397530, 370440, -170100, 37800, -3240}, 350);
        case 4:
            return scaled({-4032746, 43924815, 88280280, -743046480, 1353607200, -1160830440,
                           541870560, -141134400, 19245600, -1069200},
                          231000);
        default:
            throw InvalidInputError("no reference polynomial for k = " + std::to_string(k));
    }
}

GhatReport ghat_check(const GTable& table, int k) {
    GhatReport report;
    // scale G_{2k} by 6^{2k} and compare monomial by monomial
    GammaPoly got = pow_int(Rational(36), k) * table.even(k);
    GammaPoly want = ghat_reference(k);
    int deg = std::max(got.degree(), want.degree());
    for (int i = 0; i <= deg; ++i) {
        if (got.coeff(i) != want.coeff(i)) {
            report.ok = false;
            std::ostringstream line;
            line << "G_" << 2 * k << ": coefficient of g^" << i << " is "
                 << got.coeff(i).get_str() << ", reference " << want.coeff(i).get_str();
            report.mismatches.push_back(line.str());
        }
    }
    return report;
}

void save_g_table(const GTable& table, const std::string& path) {
    nlohmann::json doc;
    doc["format"] = 1;
    doc["gpolys"] = nlohmann::json::array();
    for (std::size_t k = 0; k < table.g.size(); ++k) {
        nlohmann::json entry;
        entry["k"] = k;
        entry["coeffs"] = nlohmann::json::array();
        for (int i = 0; i <= table.g[k].degree(); ++i)
            entry["coeffs"].push_back(rational_to_string(table.g[k].coeff(i)));
        doc["gpolys"].push_back(std::move(entry));
    }
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot write coefficient cache to " + path);
    out << doc.dump(1) << "\n";
}

std::optional<GTable> load_g_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) return std::nullopt;
    if (!doc.is_object() || doc.value("format", 0) != 1) return std::nullopt;
    if (!doc.contains("gpolys") || !doc["gpolys"].is_array()) return std::nullopt;

    GTable table;
    table.g.resize(doc["gpolys"].size());
    std::vector<bool> seen(table.g.size(), false);
    try {
        for (const auto& entry : doc["gpolys"]) {
            std::size_t k = entry.at("k").get<std::size_t>();
            if (k >= table.g.size() || seen[k]) return std::nullopt;
            std::vector<Rational> coeffs;
            for (const auto& c : entry.at("coeffs"))
                coeffs.push_back(rational_from_string(c.get<std::string>()));
            table.g[k] = GammaPoly::from_coeffs(std::move(coeffs));
            seen[k] = true;
        }
    } catch (const Error&) {
        return std::nullopt;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
    for (bool s : seen)
        if (!s) return std::nullopt;

    // a cache that cannot pass the published-polynomial check is never used
    if (table.max_even() < 4) return std::nullopt;
    for (int k = 0; k <= 4; ++k)
        if (!ghat_check(table, k).ok) return std::nullopt;
    return table;
}

}  // namespace stokesline
