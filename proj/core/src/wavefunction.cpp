#include "gupmag/wavefunction.hpp"

#include <cmath>
#include <limits>

namespace gupmag {

namespace {

double upper_lambda_or_throw(const SystemConfig& cfg, int l) {
    if (!cfg.deformed())
        throw UndeformedError("RadialWavefunction: beta = 0 has no "
                              "deformed-measure eigenfunctions");
    return lambda_exponent(cfg.epsilon, l, LambdaBranch::upper);
}

double compute_norm_constant(int n, int abs_l, double lambda, double beta) {
    // sqrt(beta) sqrt(2 n! (2n+lam+|l|) Gamma(n+lam+|l|) / (Gamma(n+lam) Gamma(n+|l|+1)))
    const double log_c2 = std::log(2.0) + std::lgamma(n + 1.0) +
                          std::log(2.0 * n + lambda + abs_l) +
                          std::lgamma(n + lambda + abs_l) -
                          std::lgamma(n + lambda) - std::lgamma(n + abs_l + 1.0);
    return std::sqrt(beta) * std::exp(0.5 * log_c2);
}

} // namespace

RadialWavefunction::RadialWavefunction(QuantumNumbers qn, const SystemConfig& cfg)
    : qn_(qn),
      lambda_(upper_lambda_or_throw(cfg, qn.l)),
      beta_(cfg.gup.beta),
      norm_const_(compute_norm_constant(qn.n, qn.abs_l(), lambda_, beta_)),
      poly_(qn.n, lambda_ - 1.0, double(qn.abs_l())) {}

double RadialWavefunction::operator()(double p) const {
    if (p < 0.0)
        throw DomainError("RadialWavefunction: p must be >= 0");
    if (std::isinf(p))
        return 0.0;

    const int al = qn_.abs_l();
    const double u = beta_ * p * p;
    if (u == 0.0)
        return al == 0 ? norm_const_ * poly_(-1.0) : 0.0;

    // z in [-1, 1); computed this way it stays exact at both ends.
    const double z = (u - 1.0) / (u + 1.0);
    // (1+u)^{-(lam+|l|)/2} u^{|l|/2} evaluated in log space so huge p is safe.
    const double log_env =
        0.5 * al * std::log(u) - 0.5 * (lambda_ + al) * std::log1p(u);
    return norm_const_ * std::exp(log_env) * poly_(z);
}

RadialWavefunction radial_wavefunction(QuantumNumbers qn, const SystemConfig& cfg) {
    return RadialWavefunction(qn, cfg);
}

NormResult norm(QuantumNumbers qn, const SystemConfig& cfg,
                const QuadraturePolicy& policy) {
    RadialWavefunction R(qn, cfg);
    auto result = deformed_quadrature(
        [&](double p) {
            const double r = R(p);
            return r * r;
        },
        cfg.gup.beta, policy);
    return {result.value, result.error};
}

double overlap(int n1, int n2, int l, const SystemConfig& cfg,
               const QuadraturePolicy& policy) {
    RadialWavefunction Ra(QuantumNumbers::from_radial(n1, l), cfg);
    RadialWavefunction Rb(QuantumNumbers::from_radial(n2, l), cfg);
    auto result = deformed_quadrature(
        [&](double p) { return Ra(p) * Rb(p); }, cfg.gup.beta, policy);
    return result.value;
}

double p2_expectation(QuantumNumbers qn, const SystemConfig& cfg,
                      LambdaBranch branch, const QuadraturePolicy& policy) {
    if (!cfg.deformed())
        throw UndeformedError("p2_expectation: requires beta > 0");

    const double lambda = lambda_exponent(cfg.epsilon, qn.l, branch);
    if (lambda <= 1.0) {
        // Integrand tail ~ p^{1 - 2 lambda}: non-integrable.  Covers every
        // lower-branch lambda, which stays below 1/2 whenever epsilon < 1.
        throw DivergentMomentError(
            "p2_expectation: tail exponent 1 - 2*lambda >= -1, the momentum "
            "uncertainty diverges on this branch");
    }

    RadialWavefunction R(qn, cfg);
    auto result = deformed_quadrature(
        [&](double p) {
            const double r = R(p);
            return p * p * r * r;
        },
        cfg.gup.beta, policy);
    return result.value;
}

} // namespace gupmag
