#include "gupmag/config.hpp"

#include <cmath>
#include <sstream>

namespace gupmag {

void GupParams::validate() const {
    if (!std::isfinite(beta) || beta < 0.0)
        throw DomainError("GupParams: beta must be finite and >= 0");
    if (beta_prime != 0.0)
        throw DomainError("GupParams: beta_prime must be 0 (simple algebra only)");
    if (gamma_rep != 0.0)
        throw DomainError("GupParams: gamma_rep must be 0 (simple algebra only)");
    if (dim < 1)
        throw DomainError("GupParams: dim must be >= 1");
}

double minimal_length(const GupParams& gup) {
    gup.validate();
    const auto& u = natural_units();
    return u.hbar * std::sqrt(gup.dim * gup.beta + gup.beta_prime);
}

double thermal_wavelength(double temperature) {
    if (!(temperature > 0.0) || !std::isfinite(temperature))
        throw DomainError("thermal_wavelength: temperature must be > 0");
    const auto& u = natural_units();
    return std::sqrt(2.0 * M_PI * u.hbar * u.hbar /
                     (u.mass * u.k_boltzmann * temperature));
}

SystemConfig make_config(double omega0, double field, double temperature,
                         double volume, double fugacity, const GupParams& gup,
                         ThermalCheck check) {
    if (!std::isfinite(omega0) || !std::isfinite(field) ||
        !std::isfinite(temperature) || !std::isfinite(volume) ||
        !std::isfinite(fugacity))
        throw DomainError("make_config: all inputs must be finite");
    if (!(omega0 > 0.0))
        throw DomainError("make_config: omega0 must be > 0");
    if (!(temperature > 0.0))
        throw DomainError("make_config: temperature must be > 0");
    if (!(volume > 0.0))
        throw DomainError("make_config: volume must be > 0");
    if (!(fugacity > 0.0))
        throw DomainError("make_config: fugacity must be > 0");
    gup.validate();

    const auto& u = natural_units();

    SystemConfig cfg;
    cfg.omega0 = omega0;
    cfg.field = field;
    cfg.temperature = temperature;
    cfg.volume = volume;
    cfg.fugacity = fugacity;
    cfg.gup = gup;

    cfg.omega = u.cyclotron(field);
    cfg.omega_tilde = std::hypot(cfg.omega, omega0);
    cfg.epsilon = u.mass * u.hbar * cfg.omega_tilde * gup.beta;
    cfg.kappa = std::sqrt(cfg.epsilon);
    cfg.lambda_th = thermal_wavelength(temperature);
    cfg.dx_min = minimal_length(gup);

    if (cfg.epsilon >= 1.0) {
        std::ostringstream msg;
        msg << "make_config: epsilon = m hbar omega_tilde beta = " << cfg.epsilon
            << " >= 1; the minimal length exceeds the oscillator length";
        throw GupViolation(msg.str());
    }

    cfg.thermal_ok = !(gup.beta > 0.0) || cfg.lambda_th > cfg.dx_min;
    if (!cfg.thermal_ok && check == ThermalCheck::strict) {
        std::ostringstream msg;
        msg << "make_config: thermal wavelength " << cfg.lambda_th
            << " does not exceed the minimal length " << cfg.dx_min
            << " (lambda_th/dx_min = " << cfg.lambda_th / cfg.dx_min << ")";
        throw ThermalRegimeViolation(msg.str());
    }

    return cfg;
}

SystemConfig make_config(double omega0, double field, double temperature,
                         double volume, double fugacity, double beta,
                         ThermalCheck check) {
    GupParams gup;
    gup.beta = beta;
    return make_config(omega0, field, temperature, volume, fugacity, gup, check);
}

SystemConfig with_field(const SystemConfig& cfg, double field) {
    return make_config(cfg.omega0, field, cfg.temperature, cfg.volume,
                       cfg.fugacity, cfg.gup,
                       cfg.thermal_ok ? ThermalCheck::strict
                                      : ThermalCheck::relaxed);
}

SystemConfig with_temperature(const SystemConfig& cfg, double temperature) {
    return make_config(cfg.omega0, cfg.field, temperature, cfg.volume,
                       cfg.fugacity, cfg.gup,
                       cfg.thermal_ok ? ThermalCheck::strict
                                      : ThermalCheck::relaxed);
}

} // namespace gupmag
