#pragma once

#include "gupmag/config.hpp"
#include "gupmag/euler_maclaurin.hpp"
#include "gupmag/quadrature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gupmag {

/// Momentum shell radius p(n_d, n_g) = sqrt(2 m hbar wt) *
///   [ (1+eps)(n_d+n_g) + (w/2wt)(n_d-n_g) + eps (n_d^2+n_g^2) ]^{1/2}.
/// Throws DomainError when the bracket is negative (the caller excludes such
/// labels from sums).
double momentum_shell(int n_d, int n_g, const SystemConfig& cfg);

/// One-particle state density per unit shell,
///
///   g(gamma) = V^{2/3}/(4 pi beta hbar^2)
///              ln[ 1 + 4 m beta hbar wt (1 + beta m hbar wt (2 gamma + 1)) ],
///
/// reducing to m wt V^{2/3} / (pi hbar) as beta -> 0 (exact closed path).
double states_density(double gamma_q, const SystemConfig& cfg);

struct GrandPotentialCutoffs {
    int initial_n = 64;         // starting per-axis cutoff
    int block = 64;             // growth step
    int hard_cap = 100000;      // per-index term cap
    double tail_rel_tol = 1e-8; // geometric tail bound target
    bool maxwell_boltzmann = true; // ln(1+x) -> x in the occupancy factor
    QuadraturePolicy pz_policy{};
};

struct GrandPotentialResult {
    double value = 0.0;
    double tail_bound = 0.0; // bound on the neglected sum tail, in value units
    int n_max_used = 0;      // per-axis cutoff actually used
    double pz_quad_error = 0.0;
};

/// Direct numerical grand potential
///
///   Phi = -(V^{1/3}/(2 pi bt hbar)) int dpz/(1+beta pz^2)
///           sum_{n_d,n_g} g(n_d,n_g) ln(1 + z e^{-bt E}),
///
/// with E the first-order spectrum and the per-pair state density using the
/// exact logarithm.  In Maxwell-Boltzmann mode the occupancy logarithm is
/// linearized (the pz integral then factorizes); the state-density logarithm
/// is never linearized here.  Throws TruncationError if the geometric tail
/// bound cannot be brought below tolerance within the cap.
GrandPotentialResult grand_potential_direct(const SystemConfig& cfg,
                                            const GrandPotentialCutoffs& cutoffs = {});

struct ClosedPotential {
    double final_form = 0.0;   // high-temperature closed form
    double intermediate = 0.0; // erf factor and exact cylinder functions kept
    double u_plus = 0.0, u_minus = 0.0; // large parameters (inf at beta = 0)
    bool regime_ok = true; // u_{+-} >= 3 and m beta/bt < 1
};

/// Closed-form grand potential at high temperature.  `final_form` is
///
///   Phi = -(2V/(bt^2 hbar lam^3)) [ (1 - m beta/bt) / (wt (1 - x^2))
///                                   + (2 beta m/(wt bt)) / (1 - x^2)^2 ],
///
/// x = w/2wt.  The bt^-2 prefactor power is fixed by carrying the pz
/// integration and the shell sums through in closed form; it is also what
/// dimensional analysis and the direct route require.  `intermediate` keeps
/// the erf factor and the exact D_{-1}, D_{-2} so the asymptotic steps can
/// be compared stage by stage.  With `enforce_regime` the validity bounds
/// throw RegimeError; otherwise they only clear `regime_ok`.
ClosedPotential grand_potential_closed(const SystemConfig& cfg,
                                       bool enforce_regime = true);

enum class SSumKind { S1, S2 };
enum class SSumSign { plus, minus };

struct SSumResult {
    double value = 0.0; // Euler-Maclaurin with corrections applied
    EulerMaclaurinResult em{};
    double u = 0.0;        // argument of the cylinder function
    bool in_regime = true; // kT >= 10 hbar wt
};

/// S1 = sum_n exp(-bt hbar wt [(1+eps+-x) n + eps n^2]), S2 the same with an
/// extra factor n, via Euler-Maclaurin with the Gaussian-exponential integral
/// in closed cylinder-function form.  `order` Bernoulli pairs are applied.
SSumResult s_sums(SSumKind kind, SSumSign sign, const SystemConfig& cfg,
                  int order = 1);

/// Brute-force reference summation of the same series.
double s_sum_direct(SSumKind kind, SSumSign sign, const SystemConfig& cfg,
                    double rel_tol = 1e-13);

enum class MomentMode { closed, numeric_closed, numeric_direct };

/// Magnetic moment M = -dPhi/dB.  `closed` evaluates the explicit formula
///
///   M = -(8V/(bt^2 hbar lam^3)) mu_B  w / (wt (3wt^2+w0^2)^2) *
///       [ (3wt^2-w0^2) - (m beta/bt) ((3wt^2-w0^2) - 24 wt^2 w^2/(3wt^2+w0^2)) ],
///
/// the exact derivative of the closed potential; the numeric modes
/// central-difference the closed or direct grand potential with one
/// Richardson level.
double magnetic_moment(const SystemConfig& cfg, MomentMode mode = MomentMode::closed,
                       bool enforce_regime = true);

enum class ChiRoute { closed, direct };

/// Susceptibility chi = dM/dB by numerical differentiation of the chosen
/// grand-potential route.
double susceptibility(const SystemConfig& cfg, ChiRoute route = ChiRoute::closed,
                      bool enforce_regime = true);

/// Closed-form limiting expressions (natural units, mu_B = 1, same bt^-2
/// prefactor power as the closed potential they derive from):
///   weak (w < w0):    -(V mu^2/(bt^2 hbar^3 lam^3 w0^3)) [1 - d (1 - 9 w^2/w0^2)]
///   zero field:       -(V mu^2/(bt^2 hbar^3 lam^3 w0^3)) [1 - d]
///   beta = 0:         -(V mu^2/(bt^2 hbar^3 lam^3 w0^3))
///   strong (w > w0):  +(16 V mu^2/(3 bt^2 hbar^3 lam^3 w^3)) [1 + (5/3) d]
/// with d = m beta/bt.
double susceptibility_weak(const SystemConfig& cfg, bool enforce_regime = true);
double susceptibility_zero_field(const SystemConfig& cfg);
double susceptibility_beta0(const SystemConfig& cfg);
double susceptibility_strong(const SystemConfig& cfg, bool enforce_regime = true);

struct CriticalFields {
    double B1 = 0.0;
    double B2 = 0.0;
    int sign_changes = 0;
    std::vector<double> scan_fields; // retained for diagnosis on failure
    std::vector<double> scan_diffs;
};

/// The two smallest fields where chi_beta(B) - chi_0(B) crosses zero, found
/// by a linear scan over (0, B_hi] followed by bisection.  The deformed and
/// baseline families share (omega0, T, V, z) with `cfg`.  Throws
/// RootNotBracketedError (carrying the scan) if two crossings are not found.
CriticalFields critical_fields(const SystemConfig& cfg, double B_hi,
                               ChiRoute route = ChiRoute::closed,
                               int scan_points = 256);

/// Minimal thermal wavelength lam_min = sqrt(pi) dx_min and the maximal
/// temperature k T_max = 2 hbar^2/(m dx_min^2) at which the thermal
/// wavelength shrinks to it and the zero-field susceptibility vanishes.
double lambda_min(double dx_min);
double max_temperature(double dx_min);

struct ThermoOptions {
    bool with_direct = true;
    bool with_numeric_direct = false; // chi/M from the direct potential too
    GrandPotentialCutoffs cutoffs{};
    bool enforce_regime = false; // out-of-regime closed values are flagged
};

/// One (T, B) evaluation record with both grand-potential routes, moments,
/// susceptibility, the regime-variant value where one applies, and
/// diagnostics.
struct ThermoPoint {
    double field = 0.0, temperature = 0.0, beta = 0.0, omega0 = 0.0;
    double volume = 0.0, fugacity = 0.0;
    double epsilon = 0.0;
    std::optional<double> lambda_over_dxmin{}; // empty at beta = 0
    std::optional<double> phi_direct{};
    double phi_closed = 0.0;
    double phi_intermediate = 0.0;
    double M_closed = 0.0;
    double M_numeric = 0.0;
    double chi_numeric = 0.0;
    std::optional<double> chi_variant{};
    std::string variant_name = "none";
    std::optional<double> u_plus{}, u_minus{};
    bool regime_ok = true;
    bool thermal_ok = true;
    double direct_tail_bound = 0.0;
    int direct_n_max = 0;
};

ThermoPoint evaluate_thermo_point(const SystemConfig& cfg,
                                  const ThermoOptions& options = {});

} // namespace gupmag
