#pragma once

#include <stdexcept>
#include <string>

namespace dimer {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Weight t outside (0,1).
struct DomainError : Error {
    using Error::Error;
};

// |t - 1/2| below eps_crit: eta1 and eta2 degenerate and the asymptotic
// constants blow up like 1/(eta1^2 - eta2^2).
struct CriticalPointError : Error {
    using Error::Error;
};

// Symbol not invertible (t at or beyond 1).
struct SingularSymbolError : Error {
    using Error::Error;
};

// Fourier sampling grid too small for the requested coefficients.
struct AliasError : Error {
    using Error::Error;
};

// Grid refinement failed to settle a quadrature value.
struct ConvergenceError : Error {
    using Error::Error;
};

// Square-root branch continuity check failed.
struct BranchError : Error {
    using Error::Error;
};

// Hankel-product truncation left a non-negligible tail.
struct TruncationError : Error {
    using Error::Error;
};

struct NegativeDeterminantError : Error {
    using Error::Error;
};

struct NonPositiveDeterminantError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

}  // namespace dimer
