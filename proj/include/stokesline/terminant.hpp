#pragma once

#include "stokesline/big_real.hpp"

namespace stokesline {

// Terminant function on the Stokes line arg z = 0 of the Kummer expansion:
//   T_nu(x e^{i pi}) = xi(nu) Gamma(1-nu, x e^{i pi}),
//   xi(nu) = e^{i pi nu} Gamma(nu) / (2 pi i),
// for nu > 0, x > 0 (DLMF 2.11.11 normalization).  The incomplete gamma is
// taken on the upper side of the cut, arg z = +pi.
//
// Two routes:
//  - non-integer nu: Gamma(1-nu, z) = Gamma(1-nu) - z^{1-nu}(1-nu)^{-1}
//    M(1-nu; 2-nu; -z) with z^{1-nu} = x^{1-nu} e^{i pi (1-nu)} (DLMF 8.5.1
//    plus the Kummer transform; -z = x is real).
//  - integer nu = N: Gamma(0, x e^{i pi}) = -Ei(x) - i pi (DLMF 6.5.2,
//    6.11.2 cut convention), then the downward recurrence
//    Gamma(s-1, z) = (Gamma(s,z) - z^{s-1} e^{-z})/(s-1) (DLMF 8.8.2).
//
// nu within 1e-10 of an integer without being exactly one is rejected:
// Gamma(1-nu) is about to blow up and the caller should perturb the
// truncation offset instead.
//
// The real part equals 1/2 identically for real nu (reflection of the
// incomplete gamma across the cut); the imaginary part carries the Stokes
// multiplier information.
BigComplex terminant_on_stokes(const BigReal& nu, const BigReal& x,
                               const PrecisionPolicy& policy);

}  // namespace stokesline
