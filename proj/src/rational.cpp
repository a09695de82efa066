#include "stokesline/rational.hpp"

#include <cctype>

#include "stokesline/errors.hpp"

namespace stokesline {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational rational_from_string(const std::string& s) {
    std::string t = s;
    // strip surrounding whitespace
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    if (t.empty()) throw InvalidInputError("empty rational literal");

    std::string body = t;
    bool negative = false;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.erase(body.begin());
    }

    auto fail = [&] { throw InvalidInputError("cannot parse '" + s + "' as an exact rational"); };

    Rational r;
    // mpz_class string constructors must be told base 10 explicitly: the
    // default base 0 would read a leading zero ("075") as octal
    if (auto slash = body.find('/'); slash != std::string::npos) {
        std::string num = body.substr(0, slash);
        std::string den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) fail();
        mpz_class d(den, 10);
        if (d == 0) throw InvalidInputError("zero denominator in '" + s + "'");
        r = Rational(mpz_class(num, 10), d);
        r.canonicalize();
    } else if (auto dot = body.find('.'); dot != std::string::npos) {
        std::string intpart = body.substr(0, dot);
        std::string frac = body.substr(dot + 1);
        if (intpart.empty()) intpart = "0";
        if (!all_digits(intpart) || !all_digits(frac)) fail();
        // p.qqq  ->  pqqq / 10^len(qqq), exactly
        mpz_class scaled(intpart + frac, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        r = Rational(scaled, den);
        r.canonicalize();
    } else {
        if (!all_digits(body)) fail();
        r = Rational(mpz_class(body, 10));
    }
    if (negative) r = -r;
    return r;
}

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

bool is_nonpositive_integer(const Rational& r) {
    return is_integer(r) && r <= 0;
}

long to_long(const Rational& r) {
    if (!is_integer(r)) throw InvalidInputError("rational " + r.get_str() + " is not an integer");
    if (!r.get_num().fits_slong_p())
        throw InvalidInputError("integer " + r.get_str() + " does not fit in a long");
    return r.get_num().get_si();
}

Rational pochhammer(const Rational& a, long n) {
    if (n < 0) throw InvalidInputError("pochhammer needs n >= 0");
    Rational p = 1;
    Rational f = a;
    for (long i = 0; i < n; ++i) {
        p *= f;
        f += 1;
    }
    return p;
}

Rational pow_int(const Rational& a, long n) {
    if (n < 0) {
        if (a == 0) throw InvalidInputError("0 raised to a negative power");
        return 1 / pow_int(a, -n);
    }
    Rational r;
    mpz_pow_ui(r.get_num().get_mpz_t(), a.get_num().get_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(r.get_den().get_mpz_t(), a.get_den().get_mpz_t(), static_cast<unsigned long>(n));
    // powers of a canonical fraction are canonical already
    return r;
}

Rational factorial(long n) {
    if (n < 0) throw InvalidInputError("factorial of a negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

}  // namespace stokesline
