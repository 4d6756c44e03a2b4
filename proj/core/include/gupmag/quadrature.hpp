#pragma once

#include "gupmag/errors.hpp"

#include <functional>

namespace gupmag {

struct QuadraturePolicy {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_panels = 4000; // adaptive subdivision budget
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0; // estimated absolute error
    int evaluations = 0;
    int panels = 0;
};

/// Globally adaptive Gauss-Kronrod (G7, K15) integration over [a, b].
/// The worst panel by error estimate is bisected until the total estimate
/// meets max(abs_tol, rel_tol * |value|) or the panel budget runs out, in
/// which case ConvergenceError is thrown.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadraturePolicy& policy = {});

/// Integral of f against the deformed radial measure,
///
///   I = int_0^inf f(p) p dp / (1 + beta p^2),
///
/// computed on the compactified variable t = arctan(p sqrt(beta)) in
/// [0, pi/2), i.e. p = tan(sqrt(beta) xi)/sqrt(beta) with t = sqrt(beta) xi.
/// For beta = 0 the measure degenerates to p dp and the same arctan
/// compactification p = tan t is used.  Divergent integrands surface as
/// ConvergenceError from the panel budget.
QuadratureResult deformed_quadrature(const std::function<double(double)>& f,
                                     double beta,
                                     const QuadraturePolicy& policy = {});

/// Integral over the whole real line of an even-or-general integrand with
/// Gaussian-like decay, via x = tan t compactification of each half-line.
QuadratureResult integrate_real_line(const std::function<double(double)>& f,
                                     const QuadraturePolicy& policy = {});

/// Integral over [0, inf) via x = tan t compactification.
QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     const QuadraturePolicy& policy = {});

} // namespace gupmag
