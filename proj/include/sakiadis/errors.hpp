#pragma once

#include <stdexcept>
#include <string>

namespace sakiadis {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reversion / inverse-power input has a vanishing linear coefficient.
struct ZeroLeadingCoefficient : Error {
    using Error::Error;
};

/// Derivative order outside the supported range.
struct UnsupportedOrder : Error {
    using Error::Error;
};

/// Too few usable coefficients for the requested tail window.
struct InsufficientTerms : Error {
    using Error::Error;
};

/// Square-root argument came out negative (inconsistent or truncated input).
struct NegativeRadicand : Error {
    using Error::Error;
};

/// Evaluation request outside the physical domain.
struct DomainError : Error {
    using Error::Error;
};

/// Physical-plane map requested too close to the corner where f vanishes.
struct OriginSingularity : Error {
    using Error::Error;
};

/// Integrated trajectory never changed sign over the requested range.
struct NoCrossing : Error {
    using Error::Error;
};

/// Adjacent integration samples jumped too much; step size is unstable.
struct StepTooLarge : Error {
    using Error::Error;
};

/// Shooting bracket endpoints do not straddle the target residual.
struct BracketFailure : Error {
    using Error::Error;
};

/// Iteration budget exhausted before reaching the requested tolerance.
struct NoConvergence : Error {
    using Error::Error;
};

/// Bisection target lies outside the attainable range.
struct NotBracketed : Error {
    using Error::Error;
};

}  // namespace sakiadis
