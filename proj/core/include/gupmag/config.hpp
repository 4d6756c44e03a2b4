#pragma once

#include "gupmag/errors.hpp"
#include "gupmag/units.hpp"

namespace gupmag {

/// Parameters of the deformed commutator algebra
///
///   [X_i, P_j] = i hbar (delta_ij + delta_ij beta P^2 + beta' P_i P_j)
///
/// Only the simple algebra beta' = 0, gamma = 0 is supported; the general
/// case is stored for bookkeeping and rejected at validation.  The momentum
/// measure squeezing exponent alpha = (gamma - beta'(D-1)/2)/(beta + beta')
/// is identically irrelevant once beta' = gamma = 0 and is therefore not
/// represented in code.
struct GupParams {
    double beta = 0.0;       // deformation parameter, inverse momentum squared
    double beta_prime = 0.0; // must be zero
    double gamma_rep = 0.0;  // representation parameter, must be zero
    int dim = 2;             // spatial dimension entering the minimal length

    void validate() const;
};

/// Isotropic minimal length dx_min = hbar * sqrt(D*beta + beta').
double minimal_length(const GupParams& gup);

/// Thermal de Broglie wavelength sqrt(2 pi hbar^2 / (m k T)).
double thermal_wavelength(double temperature);

/// Behaviour of the lambda_th > dx_min check at construction.
/// `strict` throws ThermalRegimeViolation; `relaxed` records the violation
/// in SystemConfig::thermal_ok so sweeps can flag sub-thermal points instead
/// of refusing to evaluate them.
enum class ThermalCheck { strict, relaxed };

/// Immutable bundle of physical inputs plus the derived dimensionless groups
/// every other module consumes.  Construct through make_config which enforces
/// the validity invariants; all members are safe to share across threads.
struct SystemConfig {
    // inputs
    double omega0 = 1.0;      // trap frequency
    double field = 0.0;       // magnetic field magnitude B (signed values allowed)
    double temperature = 1.0; // k_B T in natural units
    double volume = 1.0;
    double fugacity = 1.0;    // z = exp(mu/kT)
    GupParams gup{};

    // derived, cached at construction
    double omega = 0.0;       // cyclotron frequency, equals field numerically
    double omega_tilde = 1.0; // sqrt(omega^2 + omega0^2)
    double epsilon = 0.0;     // m hbar omega_tilde beta
    double kappa = 0.0;       // sqrt(m omega_tilde hbar beta) = sqrt(epsilon)
    double lambda_th = 0.0;   // thermal wavelength at `temperature`
    double dx_min = 0.0;      // minimal length
    bool thermal_ok = true;   // lambda_th > dx_min (always true when strict)

    double beta() const { return gup.beta; }
    double beta_tilde() const { return 1.0 / temperature; }

    /// m beta / beta_tilde = beta * k T, the deformation-to-thermal ratio
    /// controlling every high-temperature correction.
    double deformation_ratio() const { return gup.beta * temperature; }

    /// omega / (2 omega_tilde), in (-1/2, 1/2).
    double field_split() const { return omega / (2.0 * omega_tilde); }

    bool deformed() const { return gup.beta > 0.0; }
};

SystemConfig make_config(double omega0, double field, double temperature,
                         double volume, double fugacity, const GupParams& gup,
                         ThermalCheck check = ThermalCheck::strict);

SystemConfig make_config(double omega0, double field, double temperature,
                         double volume = 1.0, double fugacity = 1.0,
                         double beta = 0.0,
                         ThermalCheck check = ThermalCheck::strict);

/// Copy of `cfg` re-evaluated at a different field (used by B-derivatives).
SystemConfig with_field(const SystemConfig& cfg, double field);

/// Copy of `cfg` re-evaluated at a different temperature.
SystemConfig with_temperature(const SystemConfig& cfg, double temperature);

} // namespace gupmag
