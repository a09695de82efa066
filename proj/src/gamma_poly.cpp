#include "stokesline/gamma_poly.hpp"

#include <sstream>

#include "stokesline/errors.hpp"

namespace stokesline {

GammaPoly::GammaPoly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

GammaPoly GammaPoly::symbol() {
    GammaPoly p;
    p.coeffs_ = {Rational(0), Rational(1)};
    return p;
}

GammaPoly GammaPoly::from_coeffs(std::vector<Rational> coeffs) {
    GammaPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void GammaPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& GammaPoly::coeff(int i) const {
    static const Rational zero(0);
    if (i < 0) throw InvalidInputError("negative polynomial index");
    if (i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[i];
}

Rational GammaPoly::eval(const Rational& g) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= g;
        acc += *it;
    }
    return acc;
}

GammaPoly& GammaPoly::operator+=(const GammaPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

GammaPoly& GammaPoly::operator-=(const GammaPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

GammaPoly& GammaPoly::operator*=(const GammaPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> prod(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(prod);
    trim();  // no-op mathematically, keeps the invariant if a product cancels
    return *this;
}

GammaPoly& GammaPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& q : coeffs_) q *= c;
    return *this;
}

GammaPoly GammaPoly::operator-() const {
    GammaPoly p = *this;
    for (auto& q : p.coeffs_) q = -q;
    return p;
}

std::string GammaPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit = mag == 1 && i > 0;
        if (!unit) out << mag.get_str();
        if (i > 0) {
            if (!unit) out << "*";
            out << "g";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace stokesline
