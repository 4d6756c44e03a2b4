#pragma once

#include <stdexcept>
#include <string>

namespace gupmag {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument outside an operation's mathematical domain.
struct DomainError : Error {
    using Error::Error;
};

/// The dimensionless deformation epsilon = m hbar omega_tilde beta reached 1,
/// i.e. the minimal length exceeds the oscillator length.
struct GupViolation : Error {
    using Error::Error;
};

/// Thermal wavelength fell below the minimal length (lambda_th <= dx_min).
struct ThermalRegimeViolation : Error {
    using Error::Error;
};

/// Operation requires beta > 0 but the configuration is undeformed.
struct UndeformedError : Error {
    using Error::Error;
};

/// Adaptive numerical scheme exhausted its budget before reaching tolerance.
struct ConvergenceError : Error {
    using Error::Error;
};

/// Series/sum truncation bound could not be brought below tolerance.
struct TruncationError : Error {
    using Error::Error;
};

/// Momentum moment integral has a non-integrable tail (lambda too small).
struct DivergentMomentError : Error {
    using Error::Error;
};

/// Closed-form expression evaluated outside its validity regime.
struct RegimeError : Error {
    using Error::Error;
};

/// Finite-difference grid too coarse to separate truncation from residual.
struct GridTooCoarseError : Error {
    using Error::Error;
};

/// Discretized eigenproblem produced eigenvalues with imaginary parts.
struct NonRealEigenvalueError : Error {
    using Error::Error;
};

/// Root scan did not find the expected sign-change pattern.
struct RootNotBracketedError : Error {
    using Error::Error;
};

} // namespace gupmag
