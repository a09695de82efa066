#pragma once

#include <vector>

#include "stokesline/gamma_poly.hpp"

namespace stokesline {

// Truncated power series in w with GammaPoly coefficients.  A series of
// order N carries coefficients of w^0 .. w^{N-1} and guarantees nothing
// beyond; every operation returns the largest order for which all returned
// coefficients are exact given the inputs.  Arithmetic is exact rational
// throughout, so equal-order results are comparable with ==.
class PowerSeries {
public:
    explicit PowerSeries(int order);  // zero series of the given order
    PowerSeries(std::vector<GammaPoly> coeffs, int order);

    static PowerSeries constant(const GammaPoly& c, int order);
    static PowerSeries identity(int order);  // the series w

    int order() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<GammaPoly>& coeffs() const { return coeffs_; }
    const GammaPoly& operator[](int i) const;
    void set(int i, GammaPoly c);

    // valuation: index of the first nonzero coefficient, or order() if none
    int first_nonzero() const;
    bool all_coeffs_constant() const;

    PowerSeries truncated(int n) const;  // n <= order

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& s, const PowerSeries& t);
    friend PowerSeries operator-(const PowerSeries& s, const PowerSeries& t);
    friend PowerSeries operator*(const PowerSeries& s, const PowerSeries& t);
    friend PowerSeries operator*(const GammaPoly& c, const PowerSeries& s);
    // requires a nonzero rational constant term in t (see LaurentSeries for
    // the simple-pole case)
    friend PowerSeries operator/(const PowerSeries& s, const PowerSeries& t);

    bool operator==(const PowerSeries& o) const { return coeffs_ == o.coeffs_; }

    // termwise d/dw; order drops by one
    PowerSeries derivative() const;

private:
    std::vector<GammaPoly> coeffs_;  // size == order, all entries meaningful
};

// log s for s with constant term exactly 1
PowerSeries ps_log(const PowerSeries& s);

// exp s for s with constant term exactly 0
PowerSeries ps_exp(const PowerSeries& s);

// s^e = exp(e log s) for s with constant term exactly 1; the exponent may be
// a polynomial in the symbol g (used for tau^{g-1})
PowerSeries ps_pow(const PowerSeries& s, const GammaPoly& exponent);

// s(r) for r with zero constant term
PowerSeries ps_compose(const PowerSeries& s, const PowerSeries& r);

// Functional inverse: returns r with s(r(w)) = w + O(w^N), N = order(s).
// Requires zero constant term, a nonzero rational (constant GammaPoly)
// linear coefficient, and constant coefficients throughout.  The result is
// verified by composition before being returned.
PowerSeries ps_revert(const PowerSeries& s);

// Exactly one simple pole plus a power series: p/w + tail(w).
class LaurentSeries {
public:
    // num/den where den has a zero of order at most one at w = 0.  The unit
    // part of den must have a nonzero rational leading coefficient.  A zero
    // of order >= 2 raises NeedsLaurentError.
    static LaurentSeries divide(const PowerSeries& num, const PowerSeries& den);

    const GammaPoly& pole_coeff() const { return pole_; }
    const PowerSeries& tail() const { return tail_; }

private:
    LaurentSeries(GammaPoly pole, PowerSeries tail)
        : pole_(std::move(pole)), tail_(std::move(tail)) {}
    GammaPoly pole_;
    PowerSeries tail_;
};

}  // namespace stokesline
