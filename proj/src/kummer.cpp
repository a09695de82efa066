#include "stokesline/kummer.hpp"

#include <cmath>

#include "stokesline/errors.hpp"

namespace stokesline {

BigReal kummer_m(const BigReal& a, const BigReal& b, const BigReal& x,
                 const PrecisionPolicy& policy) {
    if (b.is_integer() && b.sign() <= 0)
        throw InvalidInputError("kummer_m: b must not be zero or a negative integer");

    const int allowance = x.sign() < 0 ? cancellation_allowance(x.to_double()) : 0;
    const mpfr_prec_t work = policy.working_bits(allowance);

    BigReal aw = a.at_precision(work);
    BigReal bw = b.at_precision(work);
    BigReal xw = x.at_precision(work);

    // stop once the geometric bound 2|term| (valid when the term ratio stays
    // below 1/2) is beneath one ulp of the partial sum at working precision
    BigReal tiny = BigReal::from_long(1, work);
    mpfr_mul_2si(tiny.raw(), tiny.raw(), -static_cast<long>(work), MPFR_RNDN);

    const long cap =
        10 * static_cast<long>(std::abs(x.to_double()) + std::abs(a.to_double()) +
                               std::abs(b.to_double())) +
        1000;

    const BigReal half = BigReal::from_rational(Rational(1, 2), work);
    BigReal term = BigReal::from_long(1, work);
    BigReal sum = term;
    for (long n = 0; n < cap; ++n) {
        BigReal ratio = ((aw + n) / (bw + n)) * (xw / (n + 1));
        term = term * ratio;
        if (term.is_zero()) return sum;  // terminating series (a a nonpositive integer)
        sum += term;
        if (abs(ratio) < half && abs(term) * 2 <= abs(sum) * tiny) return sum;
    }
    throw IterationLimitError("kummer_m did not converge within the iteration cap");
}

}  // namespace stokesline
