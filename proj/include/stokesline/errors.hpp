#pragma once

#include <stdexcept>
#include <string>

namespace stokesline {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument or precondition violation (order underflow, parameter out of
// the supported domain, unparsable input, ...).
struct InvalidInputError : Error {
    using Error::Error;
};

// Division by a power series whose constant term vanishes.  Allowed only
// through LaurentSeries::divide, which factors out exactly one power of w.
struct NeedsLaurentError : Error {
    using Error::Error;
};

// Series reversion asked for a series with nonzero constant term or a
// vanishing (or non-constant) linear coefficient.
struct NotInvertibleError : Error {
    using Error::Error;
};

// An internal cross-check of a coefficient derivation failed.  Never caught
// internally: if this fires, generated coefficients must not be used.
struct DerivationError : Error {
    using Error::Error;
};

// Gamma evaluated at (or numerically indistinguishable from) a pole.
struct GammaPoleError : Error {
    long nearest_pole;
    GammaPoleError(const std::string& msg, long nearest)
        : Error(msg), nearest_pole(nearest) {}
};

// A convergent iteration exceeded its cap.  Diagnostic: indicates a bug or
// wildly out-of-range parameters, not a numerical limitation.
struct IterationLimitError : Error {
    using Error::Error;
};

// Parameters land on (or too close to) a degenerate configuration, e.g. the
// terminant order 1-nu within float tolerance of a nonpositive integer
// without being exactly one.
struct ParameterDegenerateError : Error {
    using Error::Error;
};

// More derived series coefficients are required than were generated.
struct NeedsMoreCoefficientsError : Error {
    int required_order;
    NeedsMoreCoefficientsError(const std::string& msg, int required)
        : Error(msg), required_order(required) {}
};

// The optimal-truncation rule could not produce an admissible index.
struct TruncationError : Error {
    using Error::Error;
};

// Adaptive quadrature failed to converge within the level cap.
struct QuadratureLimitError : Error {
    using Error::Error;
};

}  // namespace stokesline
