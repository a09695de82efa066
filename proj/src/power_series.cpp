#include "stokesline/power_series.hpp"

#include <algorithm>

#include "stokesline/errors.hpp"

namespace stokesline {

namespace {

// Raw-vector kernels used by Newton reversion, where intermediate orders are
// managed by hand (the public operators enforce the stricter order rules).
using Coeffs = std::vector<GammaPoly>;

const GammaPoly& at(const Coeffs& v, std::size_t i) {
    static const GammaPoly zero;
    return i < v.size() ? v[i] : zero;
}

Coeffs vmul(const Coeffs& a, const Coeffs& b, std::size_t n) {
    Coeffs p(n);
    for (std::size_t i = 0; i < std::min(a.size(), n); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n && j < b.size(); ++j)
            p[i + j] += a[i] * b[j];
    }
    return p;
}

// s(r) truncated to n coefficients, r(0) = 0 assumed
Coeffs vcompose(const Coeffs& s, const Coeffs& r, std::size_t n) {
    Coeffs acc(n);
    if (s.empty()) return acc;
    acc[0] = s.back();
    for (std::size_t k = s.size() - 1; k-- > 0;) {
        acc = vmul(acc, r, n);
        acc[0] += s[k];
    }
    return acc;
}

// a/b truncated to n coefficients, b[0] a nonzero rational constant
Coeffs vdiv(const Coeffs& a, const Coeffs& b, std::size_t n) {
    Rational inv = 1 / at(b, 0).coeff(0);
    Coeffs q(n);
    for (std::size_t k = 0; k < n; ++k) {
        GammaPoly acc = at(a, k);
        for (std::size_t i = 0; i < k; ++i) acc -= q[i] * at(b, k - i);
        q[k] = acc * inv;
    }
    return q;
}

}  // namespace

PowerSeries::PowerSeries(int order) {
    if (order <= 0) throw InvalidInputError("power series order must be positive");
    coeffs_.resize(order);
}

PowerSeries::PowerSeries(std::vector<GammaPoly> coeffs, int order) {
    if (order <= 0) throw InvalidInputError("power series order must be positive");
    if (static_cast<int>(coeffs.size()) > order)
        throw InvalidInputError("more coefficients than the stated order");
    coeffs.resize(order);
    coeffs_ = std::move(coeffs);
}

PowerSeries PowerSeries::constant(const GammaPoly& c, int order) {
    PowerSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

PowerSeries PowerSeries::identity(int order) {
    if (order < 2) throw InvalidInputError("identity series needs order >= 2");
    PowerSeries s(order);
    s.coeffs_[1] = GammaPoly(1);
    return s;
}

const GammaPoly& PowerSeries::operator[](int i) const {
    if (i < 0 || i >= order())
        throw InvalidInputError("series coefficient index outside guaranteed order");
    return coeffs_[i];
}

void PowerSeries::set(int i, GammaPoly c) {
    if (i < 0 || i >= order())
        throw InvalidInputError("series coefficient index outside guaranteed order");
    coeffs_[i] = std::move(c);
}

int PowerSeries::first_nonzero() const {
    for (int i = 0; i < order(); ++i)
        if (!coeffs_[i].is_zero()) return i;
    return order();
}

bool PowerSeries::all_coeffs_constant() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const GammaPoly& c) { return c.is_constant(); });
}

PowerSeries PowerSeries::truncated(int n) const {
    if (n <= 0 || n > order()) throw InvalidInputError("bad truncation order");
    return PowerSeries(std::vector<GammaPoly>(coeffs_.begin(), coeffs_.begin() + n), n);
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PowerSeries operator+(const PowerSeries& s, const PowerSeries& t) {
    int n = std::min(s.order(), t.order());
    PowerSeries r(n);
    for (int i = 0; i < n; ++i) r.coeffs_[i] = s.coeffs_[i] + t.coeffs_[i];
    return r;
}

PowerSeries operator-(const PowerSeries& s, const PowerSeries& t) {
    int n = std::min(s.order(), t.order());
    PowerSeries r(n);
    for (int i = 0; i < n; ++i) r.coeffs_[i] = s.coeffs_[i] - t.coeffs_[i];
    return r;
}

PowerSeries operator*(const PowerSeries& s, const PowerSeries& t) {
    int n = std::min(s.order(), t.order());
    auto prod = vmul(s.coeffs_, t.coeffs_, n);
    return PowerSeries(std::move(prod), n);
}

PowerSeries operator*(const GammaPoly& c, const PowerSeries& s) {
    PowerSeries r = s;
    for (auto& q : r.coeffs_) q = c * q;
    return r;
}

PowerSeries operator/(const PowerSeries& s, const PowerSeries& t) {
    const GammaPoly& t0 = t.coeffs_[0];
    if (t0.is_zero())
        throw NeedsLaurentError("division by a series vanishing at w = 0; use LaurentSeries");
    if (!t0.is_constant())
        throw InvalidInputError("series division needs a rational constant term in the divisor");
    int n = std::min(s.order(), t.order());
    auto q = vdiv(s.coeffs_, t.coeffs_, n);
    return PowerSeries(std::move(q), n);
}

PowerSeries PowerSeries::derivative() const {
    if (order() < 2) throw InvalidInputError("derivative needs order >= 2");
    PowerSeries r(order() - 1);
    for (int i = 1; i < order(); ++i) r.coeffs_[i - 1] = coeffs_[i] * Rational(i);
    return r;
}

PowerSeries ps_log(const PowerSeries& s) {
    if (!(s[0] == GammaPoly(1)))
        throw InvalidInputError("ps_log needs constant term exactly 1");
    if (s.order() < 2) return PowerSeries(s.order());  // log 1 = 0
    // log s = integral of s'/s, integrated termwise
    PowerSeries q = s.derivative() / s.truncated(s.order() - 1);
    PowerSeries r(s.order());
    for (int k = 1; k < s.order(); ++k) r.set(k, q[k - 1] * Rational(1, k));
    return r;
}

PowerSeries ps_exp(const PowerSeries& s) {
    if (!s[0].is_zero())
        throw InvalidInputError("ps_exp needs constant term exactly 0");
    // E' = s'E gives k E_k = sum_{i=1..k} i s_i E_{k-i}
    PowerSeries r(s.order());
    r.set(0, GammaPoly(1));
    for (int k = 1; k < s.order(); ++k) {
        GammaPoly acc;
        for (int i = 1; i <= k; ++i) acc += Rational(i) * (s[i] * r[k - i]);
        r.set(k, acc * Rational(1, k));
    }
    return r;
}

PowerSeries ps_pow(const PowerSeries& s, const GammaPoly& exponent) {
    return ps_exp(exponent * ps_log(s));
}

PowerSeries ps_compose(const PowerSeries& s, const PowerSeries& r) {
    if (!r[0].is_zero())
        throw InvalidInputError("composition needs a series vanishing at w = 0");
    int n = std::min(s.order(), r.order());
    auto out = vcompose(s.coeffs(), r.coeffs(), n);
    return PowerSeries(std::move(out), n);
}

PowerSeries ps_revert(const PowerSeries& s) {
    if (s.order() < 2) throw InvalidInputError("reversion needs order >= 2");
    if (!s[0].is_zero())
        throw NotInvertibleError("reversion needs a zero constant term");
    if (!s[1].is_constant() || s[1].is_zero())
        throw NotInvertibleError("reversion needs a nonzero rational linear coefficient");
    if (!s.all_coeffs_constant())
        throw NotInvertibleError("reversion supports constant (g-free) coefficients only");

    const std::size_t n = static_cast<std::size_t>(s.order());
    Coeffs f = s.coeffs();
    Coeffs fp(n - 1);
    for (std::size_t i = 1; i < n; ++i) fp[i - 1] = f[i] * Rational(i);

    // Newton iteration r <- r - (s(r) - w)/s'(r), doubling the correct order
    // each pass.  Coefficients of the correction below the already-correct
    // order vanish identically, so padding s' with zeros is harmless.
    Coeffs r(n);
    r[1] = GammaPoly(1 / f[1].coeff(0));
    std::size_t good = 1;
    while (good < n - 1) {
        std::size_t next = std::min(2 * good, n - 1);
        Coeffs val = vcompose(f, r, next + 1);
        val[1] -= GammaPoly(1);
        Coeffs der = vcompose(fp, r, next + 1);
        Coeffs corr = vdiv(val, der, next + 1);
        for (std::size_t i = 0; i <= next; ++i) r[i] -= corr[i];
        good = next;
    }

    PowerSeries result(std::move(r), s.order());
    if (!(ps_compose(s, result) == PowerSeries::identity(s.order())))
        throw DerivationError("series reversion failed verification by composition");
    return result;
}

LaurentSeries LaurentSeries::divide(const PowerSeries& num, const PowerSeries& den) {
    int v = den.first_nonzero();
    if (v > 1)
        throw NeedsLaurentError("divisor vanishes to order " + std::to_string(v) +
                                " at w = 0; only simple poles are representable");
    if (!den[v].is_constant())
        throw InvalidInputError("Laurent division needs a rational leading divisor coefficient");
    if (v == 0) return LaurentSeries(GammaPoly(), num / den);

    // num / (w u) = (num/u) / w with u the shifted unit part of den
    PowerSeries unit(std::vector<GammaPoly>(den.coeffs().begin() + 1, den.coeffs().end()),
                     den.order() - 1);
    PowerSeries u = num / unit;
    if (u.order() < 2)
        throw InvalidInputError("not enough divisor coefficients for a Laurent tail");
    PowerSeries tail(std::vector<GammaPoly>(u.coeffs().begin() + 1, u.coeffs().end()),
                     u.order() - 1);
    return LaurentSeries(u[0], std::move(tail));
}

}  // namespace stokesline
