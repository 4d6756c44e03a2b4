#pragma once

#include "gupmag/config.hpp"
#include "gupmag/jacobi.hpp"
#include "gupmag/quadrature.hpp"
#include "gupmag/quantum_numbers.hpp"
#include "gupmag/spectrum.hpp"

namespace gupmag {

/// Normalized momentum-space radial eigenfunction
///
///   R_nl(p) = N (1 + beta p^2)^{-(lambda+|l|)/2} (beta p^2)^{|l|/2}
///             P_n^{(lambda-1, |l|)}( (beta p^2 - 1)/(beta p^2 + 1) ),
///
/// with the upper-branch decay exponent lambda and
///
///   N = sqrt(beta) sqrt( 2 n! (2n+lambda+|l|) Gamma(n+lambda+|l|)
///                        / (Gamma(n+lambda) Gamma(n+|l|+1)) ).
///
/// Unit norm holds under the deformed 2D radial measure
/// int_0^inf p dp/(1+beta p^2); the `norm` quadrature is the arbiter of that
/// statement and reports the measured constant.
class RadialWavefunction {
  public:
    RadialWavefunction(QuantumNumbers qn, const SystemConfig& cfg);

    double operator()(double p) const;

    QuantumNumbers quantum_numbers() const { return qn_; }
    double lambda() const { return lambda_; }
    double beta() const { return beta_; }
    double norm_constant() const { return norm_const_; }

  private:
    QuantumNumbers qn_;
    double lambda_;
    double beta_;
    double norm_const_;
    JacobiPolynomial poly_;
};

RadialWavefunction radial_wavefunction(QuantumNumbers qn, const SystemConfig& cfg);

struct NormResult {
    double value = 0.0;      // measured norm integral
    double quad_error = 0.0; // quadrature error estimate
};

/// int_0^inf |R_nl|^2 p dp / (1 + beta p^2); expected 1 within quadrature
/// tolerance.
NormResult norm(QuantumNumbers qn, const SystemConfig& cfg,
                const QuadraturePolicy& policy = {});

/// Same integral with R_{n1 l} R_{n2 l}; expected delta_{n1 n2}.
double overlap(int n1, int n2, int l, const SystemConfig& cfg,
               const QuadraturePolicy& policy = {});

/// <p^2> = int_0^inf p^3 dp/(1+beta p^2) |R_nl|^2.  The integrand falls off
/// as p^{1-2 lambda}, integrable only for lambda > 1; the lower branch has
/// lambda < 1/2 for every epsilon < 1 and is rejected with DivergentMoment
/// before any quadrature is attempted.
double p2_expectation(QuantumNumbers qn, const SystemConfig& cfg,
                      LambdaBranch branch = LambdaBranch::upper,
                      const QuadraturePolicy& policy = {});

} // namespace gupmag
