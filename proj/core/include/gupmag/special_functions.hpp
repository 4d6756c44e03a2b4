#pragma once

#include "gupmag/quadrature.hpp"

namespace gupmag {

/// Scaled complementary error function e^{x^2} erfc(x) for x >= 0, accurate
/// through the range where either factor would over/underflow.
double erfcx(double x);

/// Scaled parabolic cylinder functions e^{u^2/4} D_{-1}(u) and
/// e^{u^2/4} D_{-2}(u) for u >= 0.  D_{-1}(u) = e^{-u^2/4} sqrt(pi/2)
/// erfc(u/sqrt(2)); D_{-2} follows from the recurrence D_{-2} = D_0 - u D_{-1}.
double cylinder_Dm1_scaled(double u);
double cylinder_Dm2_scaled(double u);

/// Unscaled D_{-nu}(u) for nu in {1, 2} (may underflow for large u).
double cylinder_D(int nu, double u);

/// Left side of the half-line Gaussian-exponential integral
///
///   int_0^inf x^{nu-1} e^{-p x^2 - q x} dx
///     = (2p)^{-nu/2} Gamma(nu) e^{q^2/8p} D_{-nu}(q / sqrt(2p)),
///
/// by adaptive quadrature (nu >= 1, p > 0).
QuadratureResult gauss_integral_D(double nu, double p_coef, double q_coef,
                                  const QuadraturePolicy& policy = {1e-12, 1e-12,
                                                                    8000});

/// e^{u^2/4} D_{-nu}(u) recovered from the quadrature by inverting the
/// identity at p = 1/2, q = u.  Independent of the erfc-based route above.
double cylinder_D_scaled_from_quadrature(int nu, double u,
                                         const QuadraturePolicy& policy = {
                                             1e-12, 1e-12, 8000});

} // namespace gupmag
