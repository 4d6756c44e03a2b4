#pragma once

namespace gupmag {

/// Natural-unit convention used throughout the library:
///
///   hbar = m = k_B = 1,   q/(2mc) = 1
///
/// so the (half) cyclotron frequency equals the field magnitude numerically,
/// energies are plain numbers in units of hbar*omega0 once omega0 = 1 is
/// chosen, and lengths are in units of l0 = sqrt(hbar/(m*omega0)).
/// Every physics routine consumes and produces dimensionless numbers under
/// this convention; the struct exists so callers can convert to and from it
/// explicitly and so the Bohr magneton stays symbolic in susceptibility
/// prefactors.
struct UnitSystem {
    double hbar = 1.0;
    double mass = 1.0;
    double k_boltzmann = 1.0;
    double q_over_2mc = 1.0; // cyclotron frequency per unit field

    /// mu_B = q hbar / (2 m c); equal to 1 in this convention.
    double bohr_magneton() const { return q_over_2mc * hbar; }

    /// Cyclotron frequency omega = (q/2mc) * B.
    double cyclotron(double field) const { return q_over_2mc * field; }

    /// Inverse temperature 1/(k_B T).
    double inverse_temperature(double temperature) const {
        return 1.0 / (k_boltzmann * temperature);
    }

    /// Dimensionless energy in units of hbar*omega and back.
    double to_dimensionless_energy(double energy, double omega) const {
        return energy / (hbar * omega);
    }
    double from_dimensionless_energy(double value, double omega) const {
        return value * hbar * omega;
    }
};

inline const UnitSystem& natural_units() {
    static const UnitSystem units{};
    return units;
}

} // namespace gupmag
