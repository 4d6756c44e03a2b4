#pragma once

#include "gupmag/config.hpp"
#include "gupmag/quantum_numbers.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gupmag {

enum class LambdaBranch { upper, lower };

/// Large-momentum decay exponent of the radial eigenfunctions,
///
///   lambda = 1 +- (1/epsilon) sqrt(1 + epsilon^2 (1 + l^2)).
///
/// Only the upper branch satisfies the physicality bound lambda > 1/2; the
/// lower branch is kept so callers can demonstrate its rejection.  The
/// undeformed case has no lambda and must be special-cased by callers.
double lambda_exponent(double epsilon, int l, LambdaBranch branch);

struct SpectrumLevel {
    QuantumNumbers qn{};
    double energy = 0.0;                    // absolute, natural units
    std::optional<double> lambda_exp{};     // empty when beta = 0
    LambdaBranch branch = LambdaBranch::upper;
    double pz = 0.0;
};

/// Exact eigenvalue
///
///   E = pz^2/2m + hbar wt [ (N+1) sqrt(1 + eps^2 (1+l^2))
///                           + (eps/2)(N^2 + l^2 + 2N + 2) + (w/2wt) l ],
///
/// N = 2n + |l|, eps = m hbar wt beta.  At beta = 0 this reduces to the
/// Fock-Darwin spectrum hbar wt (N+1) + hbar w l / 2 + pz^2/2m, evaluated
/// directly without going through the (there divergent) lambda exponent.
SpectrumLevel energy_exact(QuantumNumbers qn, double pz, const SystemConfig& cfg);

/// First order in epsilon, in circular quantum numbers:
///
///   E = pz^2/2m + hbar wt (1+eps)
///       + hbar wt [ (1 + eps + w/2wt) n_d + eps n_d^2 ]
///       + hbar wt [ (1 + eps - w/2wt) n_g + eps n_g^2 ].
double energy_first_order(int n_d, int n_g, double pz, const SystemConfig& cfg);

/// Half-integer quantum number stored as twice its value, so the shell
/// labels gamma_q = (n_d+n_g)/2 and rho_q = (n_d-n_g)/2 group exactly.
struct HalfInt {
    int twice = 0;
    double value() const { return 0.5 * twice; }
    static HalfInt of(int n_d_plus_or_minus) { return HalfInt{n_d_plus_or_minus}; }
    static HalfInt from_value_times_two(int t) { return HalfInt{t}; }
};

/// Closed-form energy in a limiting regime plus a flag telling whether the
/// configuration actually sits in that regime (w/w0 <= 0.1 weak,
/// w/w0 >= 10 strong).  Out-of-regime values are still returned.
struct RegimeValue {
    double value = 0.0;
    bool in_regime = true;
};

/// Weak field (w << w0):  E = 2 hbar w0 [ (g + 1/2)
///                              + beta m hbar w0 (g(g+1) + r^2 + 1/2) ].
RegimeValue weak_field_energy(HalfInt gamma_q, HalfInt rho_q, const SystemConfig& cfg);

/// Strong field (w >> w0): E = 2 hbar w [ (g + (1+r)/2)
///                              + beta m hbar w (g(g+1) + r^2) ].
RegimeValue strong_field_energy(HalfInt gamma_q, HalfInt rho_q, const SystemConfig& cfg);

enum class EnergyFormula { exact, first_order, weak, strong };

struct DegeneracyClass {
    double energy = 0.0;                          // class representative
    std::vector<std::pair<int, int>> members;     // (n_d, n_g)
    int multiplicity() const { return static_cast<int>(members.size()); }
};

struct DegeneracyTable {
    std::vector<DegeneracyClass> classes; // ascending in energy
    int class_of(int n_d, int n_g) const; // -1 if absent
};

/// Group all levels with n_d + n_g <= max_N into energy classes within the
/// relative tolerance `tol`.  Integer class keys are used where the formula
/// is exactly rational (beta = 0 with w = 0, and the beta = 0 limiting-regime
/// formulas); otherwise grouping is by tolerance on sorted energies.
DegeneracyTable degeneracy_table(const SystemConfig& cfg, int max_N, double tol,
                                 EnergyFormula formula = EnergyFormula::first_order);

} // namespace gupmag
