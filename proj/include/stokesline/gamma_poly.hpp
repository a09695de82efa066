#pragma once

#include <string>
#include <vector>

#include "stokesline/rational.hpp"

namespace stokesline {

// Polynomial in a single abstract symbol g with exact rational coefficients.
// The symbol stands for the shift parameter of the terminant expansion (the
// quantity usually written gamma_j = alpha - j); carrying it symbolically
// means one derivation serves every truncation offset.
class GammaPoly {
public:
    GammaPoly() = default;                    // zero polynomial
    GammaPoly(const Rational& c);             // constant (implicit on purpose)
    GammaPoly(long c) : GammaPoly(Rational(c)) {}

    static GammaPoly symbol();                // the polynomial g itself
    static GammaPoly from_coeffs(std::vector<Rational> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // coefficient of g^i; zero beyond the degree
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& g) const;

    GammaPoly& operator+=(const GammaPoly& o);
    GammaPoly& operator-=(const GammaPoly& o);
    GammaPoly& operator*=(const GammaPoly& o);
    GammaPoly& operator*=(const Rational& c);
    GammaPoly operator-() const;

    friend GammaPoly operator+(GammaPoly a, const GammaPoly& b) { return a += b; }
    friend GammaPoly operator-(GammaPoly a, const GammaPoly& b) { return a -= b; }
    friend GammaPoly operator*(GammaPoly a, const GammaPoly& b) { return a *= b; }
    friend GammaPoly operator*(GammaPoly a, const Rational& c) { return a *= c; }
    friend GammaPoly operator*(const Rational& c, GammaPoly a) { return a *= c; }

    bool operator==(const GammaPoly& o) const { return coeffs_ == o.coeffs_; }

    // human-readable form like "2/3 - g" (ascending powers)
    std::string str() const;

private:
    std::vector<Rational> coeffs_;  // coeffs_[i] multiplies g^i, trailing zeros trimmed
    void trim();
};

}  // namespace stokesline
