#include "gupmag/special_functions.hpp"

#include "gupmag/errors.hpp"

#include <cmath>

namespace gupmag {

double erfcx(double x) {
    if (!(x >= 0.0))
        throw DomainError("erfcx: x must be >= 0");
    // The direct product is exact wherever neither factor over/underflows
    // (x < ~26); the continued fraction converges fast only for large x.
    if (x < 25.0)
        return std::exp(x * x) * std::erfc(x);

    // Laplace continued fraction, modified Lentz evaluation:
    // erfcx(x) = (1/sqrt(pi)) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))).
    const double tiny = 1e-300;
    double f = x;
    double c = f;
    double d = 0.0;
    for (int k = 1; k <= 200; ++k) {
        const double a = 0.5 * k;
        d = x + a * d;
        if (d == 0.0)
            d = tiny;
        c = x + a / c;
        if (c == 0.0)
            c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16)
            break;
    }
    return 1.0 / (std::sqrt(M_PI) * f);
}

double cylinder_Dm1_scaled(double u) {
    if (!(u >= 0.0))
        throw DomainError("cylinder_Dm1_scaled: u must be >= 0");
    return std::sqrt(M_PI / 2.0) * erfcx(u / std::sqrt(2.0));
}

double cylinder_Dm2_scaled(double u) {
    if (!(u >= 0.0))
        throw DomainError("cylinder_Dm2_scaled: u must be >= 0");
    if (u > 50.0) {
        // 1 - u*Dm1 cancels; asymptotic series u^{-2}(1 - 3/u^2 + 15/u^4 - ...)
        const double u2 = u * u;
        return (1.0 - 3.0 / u2 + 15.0 / (u2 * u2) - 105.0 / (u2 * u2 * u2)) / u2;
    }
    return 1.0 - u * cylinder_Dm1_scaled(u);
}

double cylinder_D(int nu, double u) {
    const double scale = std::exp(-u * u / 4.0);
    if (nu == 1)
        return scale * cylinder_Dm1_scaled(u);
    if (nu == 2)
        return scale * cylinder_Dm2_scaled(u);
    throw DomainError("cylinder_D: only nu in {1, 2} supported");
}

QuadratureResult gauss_integral_D(double nu, double p_coef, double q_coef,
                                  const QuadraturePolicy& policy) {
    if (!(nu >= 1.0))
        throw DomainError("gauss_integral_D: nu must be >= 1");
    if (!(p_coef > 0.0))
        throw DomainError("gauss_integral_D: p must be > 0");
    return integrate_half_line(
        [=](double x) {
            return std::pow(x, nu - 1.0) * std::exp(-p_coef * x * x - q_coef * x);
        },
        policy);
}

double cylinder_D_scaled_from_quadrature(int nu, double u,
                                         const QuadraturePolicy& policy) {
    if (nu != 1 && nu != 2)
        throw DomainError("cylinder_D_scaled_from_quadrature: nu in {1, 2}");
    // At p = 1/2, q = u:  integral = Gamma(nu) e^{u^2/4} D_{-nu}(u).
    const auto integral = gauss_integral_D(nu, 0.5, u, policy);
    return integral.value / std::tgamma(double(nu));
}

} // namespace gupmag
