#include "gupmag/thermo.hpp"

#include "gupmag/special_functions.hpp"
#include "gupmag/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace gupmag {

double momentum_shell(int n_d, int n_g, const SystemConfig& cfg) {
    if (n_d < 0 || n_g < 0)
        throw DomainError("momentum_shell: n_d, n_g must be >= 0");
    const auto& u = natural_units();
    const double eps = cfg.epsilon;
    const double x = cfg.field_split();
    const double bracket = (1.0 + eps) * (n_d + n_g) + x * (n_d - n_g) +
                           eps * (double(n_d) * n_d + double(n_g) * n_g);
    if (bracket < 0.0) {
        std::ostringstream msg;
        msg << "momentum_shell: negative bracket at (n_d, n_g) = (" << n_d
            << ", " << n_g << "); label excluded from shell sums";
        throw DomainError(msg.str());
    }
    return std::sqrt(2.0 * u.mass * u.hbar * cfg.omega_tilde) * std::sqrt(bracket);
}

double states_density(double gamma_q, const SystemConfig& cfg) {
    if (gamma_q < 0.0)
        throw DomainError("states_density: gamma_q must be >= 0");
    const auto& u = natural_units();
    const double v23 = std::pow(cfg.volume, 2.0 / 3.0);
    if (!cfg.deformed())
        return u.mass * cfg.omega_tilde * v23 / (M_PI * u.hbar);
    const double eps = cfg.epsilon;
    return v23 / (4.0 * M_PI * cfg.gup.beta * u.hbar * u.hbar) *
           std::log1p(4.0 * eps * (1.0 + eps * (2.0 * gamma_q + 1.0)));
}

namespace {

/// Per-pair state-density logarithm in the double shell sum.
double shell_log(int s, double eps) {
    return std::log1p(4.0 * eps * (1.0 + eps * (s + 1.0)));
}

/// exp(-bt wt [(1+eps+-x) n + eps n^2]) for n = 0..n_max.
std::vector<double> axis_weights(const SystemConfig& cfg, double sign, int n_max) {
    const double bw = cfg.beta_tilde() * cfg.omega_tilde;
    const double lin = 1.0 + cfg.epsilon + sign * cfg.field_split();
    std::vector<double> w(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        w[n] = std::exp(-bw * (lin * n + cfg.epsilon * double(n) * n));
    return w;
}

struct ShellSum {
    double value = 0.0;
    double tail_bound = 0.0;
    int n_max = 0;
};

/// sum_{i,j <= N} L(i+j) A+[i] A-[j] grown until the geometric tail bound
/// (majorant ratio r = exp(-bt wt (1 - |x|))) drops below tolerance.
ShellSum shell_double_sum(const SystemConfig& cfg, const GrandPotentialCutoffs& cut) {
    const double bw = cfg.beta_tilde() * cfg.omega_tilde;
    const double r = std::exp(-bw * (1.0 - std::abs(cfg.field_split())));
    const double eps = cfg.epsilon;
    const bool deformed = cfg.deformed();

    int n_max = cut.initial_n;
    while (true) {
        auto ap = axis_weights(cfg, +1.0, n_max);
        auto am = axis_weights(cfg, -1.0, n_max);
        std::vector<double> L(2 * n_max + 1, 1.0);
        if (deformed)
            for (int s = 0; s <= 2 * n_max; ++s)
                L[s] = shell_log(s, eps);

        double sum = 0.0;
        for (int i = 0; i <= n_max; ++i) {
            double row = 0.0;
            for (int j = 0; j <= n_max; ++j)
                row += L[i + j] * am[j];
            sum += ap[i] * row;
        }

        // L-shaped boundary layer at index n_max, propagated geometrically.
        double edge = 0.0;
        for (int i = 0; i <= n_max; ++i)
            edge += L[i + n_max] * (ap[i] * am[n_max] + ap[n_max] * am[i]);
        edge -= L[2 * n_max] * ap[n_max] * am[n_max];
        const double growth = deformed && L[2 * n_max - 1] > 0.0
                                  ? L[2 * n_max] / L[2 * n_max - 1]
                                  : 1.0;
        const double tail = 2.0 * edge * growth * r / (1.0 - r);

        if (tail <= cut.tail_rel_tol * std::abs(sum))
            return {sum, tail, n_max};
        if (n_max >= cut.hard_cap) {
            std::ostringstream msg;
            msg << "grand_potential_direct: tail bound " << tail
                << " above tolerance at the per-index cap " << cut.hard_cap;
            throw TruncationError(msg.str());
        }
        n_max = std::min(cut.hard_cap, n_max * 2 + cut.block);
    }
}

/// Like shell_double_sum but with the occupancy log kept exact; the weight
/// of one pz slice enters through `boltzmann` = z exp(-bt pz^2/2m).
double shell_double_sum_exact_ln(double boltzmann,
                                 int n_max, const std::vector<double>& ap,
                                 const std::vector<double>& am,
                                 const std::vector<double>& L, double zero_point) {
    double sum = 0.0;
    for (int i = 0; i <= n_max; ++i) {
        double row = 0.0;
        const double wi = zero_point * ap[i];
        for (int j = 0; j <= n_max; ++j)
            row += L[i + j] * std::log1p(boltzmann * wi * am[j]);
        sum += row;
    }
    return sum;
}

} // namespace

GrandPotentialResult grand_potential_direct(const SystemConfig& cfg,
                                            const GrandPotentialCutoffs& cutoffs) {
    const auto& u = natural_units();
    const double T = cfg.temperature;
    const double bt = cfg.beta_tilde();
    const double beta = cfg.gup.beta;
    const double v13 = std::pow(cfg.volume, 1.0 / 3.0);
    const double v23 = std::pow(cfg.volume, 2.0 / 3.0);
    const double zero_point = std::exp(-bt * u.hbar * cfg.omega_tilde * (1.0 + cfg.epsilon));

    // State-density prefactor: exact-log path for beta > 0, constant for 0.
    const double g_pref = cfg.deformed()
                              ? v23 / (4.0 * M_PI * beta * u.hbar * u.hbar)
                              : u.mass * cfg.omega_tilde * v23 / (M_PI * u.hbar);

    GrandPotentialResult result;

    if (cutoffs.maxwell_boltzmann) {
        // ln(1+z e^{-bt E}) -> z e^{-bt E}: the pz integral factorizes.
        double iz_err = 0.0;
        double iz;
        if (cfg.deformed()) {
            auto quad = integrate_real_line(
                [&](double pz) {
                    return std::exp(-bt * pz * pz / (2.0 * u.mass)) /
                           (1.0 + beta * pz * pz);
                },
                cutoffs.pz_policy);
            iz = quad.value;
            iz_err = quad.error;
        } else {
            iz = std::sqrt(2.0 * M_PI * u.mass * T);
        }

        auto shells = shell_double_sum(cfg, cutoffs);
        const double prefactor = v13 / (2.0 * M_PI * bt * u.hbar);
        result.value = -prefactor * iz * g_pref * cfg.fugacity * zero_point * shells.value;
        result.tail_bound = prefactor * iz * g_pref * cfg.fugacity * zero_point *
                            shells.tail_bound;
        result.n_max_used = shells.n_max;
        result.pz_quad_error = iz_err;
        return result;
    }

    // Exact occupancy logarithm: nested pz quadrature over the double sum.
    // The MB cutoff majorizes the exact-log tail (ln(1+x) <= x).
    auto mb_cut = cutoffs;
    mb_cut.maxwell_boltzmann = true;
    const int n_max = shell_double_sum(cfg, mb_cut).n_max;

    auto ap = axis_weights(cfg, +1.0, n_max);
    auto am = axis_weights(cfg, -1.0, n_max);
    std::vector<double> L(2 * n_max + 1, 1.0);
    if (cfg.deformed())
        for (int s = 0; s <= 2 * n_max; ++s)
            L[s] = shell_log(s, cfg.epsilon);

    auto integrand = [&](double pz) {
        const double boltz = cfg.fugacity * std::exp(-bt * pz * pz / (2.0 * u.mass));
        const double inner =
            shell_double_sum_exact_ln(boltz, n_max, ap, am, L, zero_point);
        return inner / (1.0 + beta * pz * pz);
    };
    auto quad = integrate_real_line(integrand, cutoffs.pz_policy);

    const double prefactor = v13 / (2.0 * M_PI * bt * u.hbar);
    result.value = -prefactor * g_pref * quad.value;
    result.tail_bound = 0.0; // bounded by the MB-mode bound used for n_max
    result.n_max_used = n_max;
    result.pz_quad_error = quad.error;
    return result;
}

ClosedPotential grand_potential_closed(const SystemConfig& cfg, bool enforce_regime) {
    const auto& u = natural_units();
    const double T = cfg.temperature;
    const double bt = cfg.beta_tilde();
    const double x = cfg.field_split();
    const double wt = cfg.omega_tilde;
    const double lam3 = std::pow(cfg.lambda_th, 3);
    const double one_minus_x2 = 1.0 - x * x;

    // Prefactor 2V/(bt^2 hbar lam^3) = 2 V T^2 / (hbar lam^3).  The bt^2
    // power is what the pz-integrated shell sum produces; it also makes the
    // expression carry energy units and agree with the direct route.
    const double closed_pref = 2.0 * cfg.volume * T * T / (u.hbar * lam3);

    ClosedPotential out;

    if (!cfg.deformed()) {
        out.final_form = -closed_pref / (wt * one_minus_x2);
        out.intermediate = out.final_form;
        out.u_plus = out.u_minus = std::numeric_limits<double>::infinity();
        out.regime_ok = true;
        return out;
    }

    const double beta = cfg.gup.beta;
    const double delta = cfg.deformation_ratio(); // m beta / bt
    out.u_plus = (1.0 + x) / std::sqrt(2.0 * delta);
    out.u_minus = (1.0 - x) / std::sqrt(2.0 * delta);
    out.regime_ok = std::min(out.u_plus, out.u_minus) >= 3.0 && delta < 1.0;
    if (enforce_regime && !out.regime_ok) {
        std::ostringstream msg;
        msg << "grand_potential_closed: outside validity (u- = " << out.u_minus
            << ", u+ = " << out.u_plus << ", m beta/bt = " << delta << ")";
        throw RegimeError(msg.str());
    }

    // Final high-temperature form.
    out.final_form = -closed_pref * ((1.0 - delta) / (wt * one_minus_x2) +
                                     (2.0 * delta / wt) /
                                         (one_minus_x2 * one_minus_x2));

    // Intermediate form: erf factor and exact cylinder functions retained.
    const double a1p = cylinder_Dm1_scaled(out.u_plus) /
                       (u.hbar * wt * std::sqrt(2.0 * bt * beta * u.mass));
    const double a1m = cylinder_Dm1_scaled(out.u_minus) /
                       (u.hbar * wt * std::sqrt(2.0 * bt * beta * u.mass));
    const double a2p = cylinder_Dm2_scaled(out.u_plus) /
                       (2.0 * u.hbar * u.hbar * wt * wt * bt * beta * u.mass);
    const double a2m = cylinder_Dm2_scaled(out.u_minus) /
                       (2.0 * u.hbar * u.hbar * wt * wt * bt * beta * u.mass);
    const double bracket = (0.5 + a1p) * (0.5 + a1m) +
                           cfg.epsilon * (a2p * (0.5 + a1m) + a2m * (0.5 + a1p));
    const double erf_factor = erfcx(std::sqrt(bt / (2.0 * beta * u.mass)));
    const double prefactor = u.mass * wt * cfg.volume /
                             (2.0 * M_PI * std::sqrt(beta) * bt * u.hbar * u.hbar);
    out.intermediate = -prefactor * std::exp(-bt * u.hbar * wt) * erf_factor * bracket;
    return out;
}

SSumResult s_sums(SSumKind kind, SSumSign sign, const SystemConfig& cfg, int order) {
    if (!cfg.deformed())
        throw UndeformedError("s_sums: requires beta > 0 (geometric series at 0)");
    const double bw = cfg.beta_tilde() * natural_units().hbar * cfg.omega_tilde;
    const double sg = sign == SSumSign::plus ? 1.0 : -1.0;
    const double p = bw * cfg.epsilon;
    const double q = bw * (1.0 + cfg.epsilon + sg * cfg.field_split());

    SSumResult out;
    out.u = q / std::sqrt(2.0 * p);
    out.in_regime = bw <= 0.1;

    double f0, integral;
    double derivs[3];
    if (kind == SSumKind::S1) {
        f0 = 1.0;
        integral = cylinder_Dm1_scaled(out.u) / std::sqrt(2.0 * p);
        derivs[0] = -q;
        derivs[1] = 6.0 * p * q - q * q * q;
        derivs[2] = -std::pow(q, 5) + 20.0 * p * q * q * q - 60.0 * p * p * q;
    } else {
        f0 = 0.0;
        integral = cylinder_Dm2_scaled(out.u) / (2.0 * p);
        derivs[0] = 1.0;
        derivs[1] = 3.0 * (q * q - 2.0 * p);
        derivs[2] = 5.0 * (std::pow(q, 4) - 12.0 * p * q * q + 12.0 * p * p);
    }
    out.em = euler_maclaurin(f0, integral, std::span<const double>(derivs, 3), order);
    out.value = out.em.with_corrections;
    return out;
}

double s_sum_direct(SSumKind kind, SSumSign sign, const SystemConfig& cfg,
                    double rel_tol) {
    const double bw = cfg.beta_tilde() * natural_units().hbar * cfg.omega_tilde;
    const double sg = sign == SSumSign::plus ? 1.0 : -1.0;
    const double p = bw * cfg.epsilon;
    const double q = bw * (1.0 + cfg.epsilon + sg * cfg.field_split());

    double sum = 0.0;
    for (long n = 0; n < 100000000L; ++n) {
        const double expo = -(q * n + p * double(n) * n);
        const double term = (kind == SSumKind::S1 ? 1.0 : double(n)) * std::exp(expo);
        sum += term;
        if (n > 2 && term < rel_tol * sum && expo < -2.0)
            return sum;
    }
    throw ConvergenceError("s_sum_direct: series did not converge under cap");
}

namespace {

/// Central difference with one Richardson level; `f` must be smooth in B.
template <typename F>
double derivative_richardson(const F& f, double b, double h) {
    const double d1 = (f(b + h) - f(b - h)) / (2.0 * h);
    const double d2 = (f(b + 0.5 * h) - f(b - 0.5 * h)) / h;
    return (4.0 * d2 - d1) / 3.0;
}

template <typename F>
double second_derivative_richardson(const F& f, double b, double h) {
    const double f0 = f(b);
    const double d1 = (f(b + h) - 2.0 * f0 + f(b - h)) / (h * h);
    const double d2 = (f(b + 0.5 * h) - 2.0 * f0 + f(b - 0.5 * h)) / (0.25 * h * h);
    return (4.0 * d2 - d1) / 3.0;
}

double phi_closed_at(const SystemConfig& cfg, double field, bool enforce_regime) {
    return grand_potential_closed(with_field(cfg, field), enforce_regime).final_form;
}

double phi_direct_at(const SystemConfig& cfg, double field) {
    return grand_potential_direct(with_field(cfg, field)).value;
}

double derivative_step(const SystemConfig& cfg) {
    return 1e-4 * std::max(std::abs(cfg.field), cfg.omega0);
}

} // namespace

double magnetic_moment(const SystemConfig& cfg, MomentMode mode, bool enforce_regime) {
    const auto& u = natural_units();
    switch (mode) {
    case MomentMode::closed: {
        const double T = cfg.temperature;
        const double lam3 = std::pow(cfg.lambda_th, 3);
        const double wt = cfg.omega_tilde;
        const double w0 = cfg.omega0;
        const double w = cfg.omega;
        const double delta = cfg.deformation_ratio();
        const double Dd = 3.0 * wt * wt + w0 * w0;
        const double core = 3.0 * wt * wt - w0 * w0;
        if (enforce_regime && cfg.deformed())
            grand_potential_closed(cfg, true); // surface the regime check
        // -dPhi/dB of the closed potential, same bt^2 prefactor power.
        return -(8.0 * cfg.volume * T * T / (u.hbar * lam3)) * u.q_over_2mc *
               (w / (wt * Dd * Dd)) *
               (core - delta * (core - 24.0 * wt * wt * w * w / Dd));
    }
    case MomentMode::numeric_closed:
        return -derivative_richardson(
            [&](double b) { return phi_closed_at(cfg, b, enforce_regime); },
            cfg.field, derivative_step(cfg));
    case MomentMode::numeric_direct:
        return -derivative_richardson(
            [&](double b) { return phi_direct_at(cfg, b); }, cfg.field,
            derivative_step(cfg));
    }
    throw DomainError("magnetic_moment: unknown mode");
}

double susceptibility(const SystemConfig& cfg, ChiRoute route, bool enforce_regime) {
    const double h = derivative_step(cfg);
    if (route == ChiRoute::closed) {
        // dM/dB of the closed moment (equivalently -d^2 Phi_final / dB^2).
        return derivative_richardson(
            [&](double b) {
                return magnetic_moment(with_field(cfg, b), MomentMode::closed,
                                       enforce_regime);
            },
            cfg.field, h);
    }
    return -second_derivative_richardson(
        [&](double b) { return phi_direct_at(cfg, b); }, cfg.field, h);
}

namespace {

double chi_prefactor(const SystemConfig& cfg) {
    const auto& u = natural_units();
    const double mu = u.bohr_magneton();
    const double T = cfg.temperature;
    return cfg.volume * mu * mu * T * T /
           (std::pow(u.hbar, 3) * std::pow(cfg.lambda_th, 3));
}

} // namespace

double susceptibility_weak(const SystemConfig& cfg, bool enforce_regime) {
    const double w = std::abs(cfg.omega);
    if (enforce_regime && !(w < cfg.omega0))
        throw RegimeError("susceptibility_weak: requires |w| < w0");
    const double delta = cfg.deformation_ratio();
    const double ratio2 = (w * w) / (cfg.omega0 * cfg.omega0);
    return -chi_prefactor(cfg) / std::pow(cfg.omega0, 3) *
           (1.0 - delta * (1.0 - 9.0 * ratio2));
}

double susceptibility_zero_field(const SystemConfig& cfg) {
    return -chi_prefactor(cfg) / std::pow(cfg.omega0, 3) *
           (1.0 - cfg.deformation_ratio());
}

double susceptibility_beta0(const SystemConfig& cfg) {
    return -chi_prefactor(cfg) / std::pow(cfg.omega0, 3);
}

double susceptibility_strong(const SystemConfig& cfg, bool enforce_regime) {
    const double w = std::abs(cfg.omega);
    if (enforce_regime && !(w > cfg.omega0))
        throw RegimeError("susceptibility_strong: requires |w| > w0");
    return 16.0 * chi_prefactor(cfg) / (3.0 * std::pow(w, 3)) *
           (1.0 + (5.0 / 3.0) * cfg.deformation_ratio());
}

CriticalFields critical_fields(const SystemConfig& cfg, double B_hi, ChiRoute route,
                               int scan_points) {
    if (!cfg.deformed())
        throw DomainError("critical_fields: needs a deformed (beta > 0) family");
    if (!(B_hi > 0.0))
        throw DomainError("critical_fields: B_hi must be > 0");
    if (scan_points < 8)
        throw DomainError("critical_fields: scan_points must be >= 8");
    {
        // Construction at B_hi must be possible (GUP bound is field-dependent).
        (void)with_field(cfg, B_hi);
    }

    const SystemConfig base0 = make_config(cfg.omega0, 0.0, cfg.temperature,
                                           cfg.volume, cfg.fugacity, 0.0);
    auto diff = [&](double b) {
        const double chi_b = susceptibility(with_field(cfg, b), route, false);
        const double chi_0 = susceptibility(with_field(base0, b), route, false);
        return chi_b - chi_0;
    };

    CriticalFields out;
    out.scan_fields.reserve(scan_points);
    out.scan_diffs.reserve(scan_points);
    for (int i = 1; i <= scan_points; ++i) {
        const double b = B_hi * double(i) / scan_points;
        out.scan_fields.push_back(b);
        out.scan_diffs.push_back(diff(b));
    }

    std::vector<double> roots;
    for (int i = 1; i < scan_points; ++i) {
        double lo = out.scan_fields[i - 1], hi = out.scan_fields[i];
        double flo = out.scan_diffs[i - 1], fhi = out.scan_diffs[i];
        if (flo == 0.0) {
            roots.push_back(lo);
            continue;
        }
        if (flo * fhi >= 0.0)
            continue;
        for (int iter = 0; iter < 80 && (hi - lo) > 1e-12 * B_hi; ++iter) {
            const double mid = 0.5 * (lo + hi);
            const double fm = diff(mid);
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            if (flo * fm < 0.0) {
                hi = mid;
                fhi = fm;
            } else {
                lo = mid;
                flo = fm;
            }
        }
        roots.push_back(0.5 * (lo + hi));
    }

    out.sign_changes = static_cast<int>(roots.size());
    if (roots.size() < 2) {
        std::ostringstream msg;
        msg << "critical_fields: expected two sign changes of chi_beta - chi_0 "
               "on (0, "
            << B_hi << "], found " << roots.size();
        RootNotBracketedError err(msg.str());
        throw err;
    }
    out.B1 = roots[0];
    out.B2 = roots[1];
    return out;
}

double lambda_min(double dx_min) {
    if (!(dx_min > 0.0))
        throw DomainError("lambda_min: dx_min must be > 0");
    return std::sqrt(M_PI) * dx_min;
}

double max_temperature(double dx_min) {
    if (!(dx_min > 0.0))
        throw DomainError("max_temperature: dx_min must be > 0");
    const auto& u = natural_units();
    // (2/mc^2)(hbar c / dx)^2 = 2 hbar^2 / (m dx^2)
    return 2.0 * u.hbar * u.hbar / (u.mass * dx_min * dx_min * u.k_boltzmann);
}

ThermoPoint evaluate_thermo_point(const SystemConfig& cfg, const ThermoOptions& options) {
    ThermoPoint pt;
    pt.field = cfg.field;
    pt.temperature = cfg.temperature;
    pt.beta = cfg.gup.beta;
    pt.omega0 = cfg.omega0;
    pt.volume = cfg.volume;
    pt.fugacity = cfg.fugacity;
    pt.epsilon = cfg.epsilon;
    pt.thermal_ok = cfg.thermal_ok;
    if (cfg.deformed())
        pt.lambda_over_dxmin = cfg.lambda_th / cfg.dx_min;

    auto closed = grand_potential_closed(cfg, options.enforce_regime);
    pt.phi_closed = closed.final_form;
    pt.phi_intermediate = closed.intermediate;
    pt.regime_ok = closed.regime_ok && cfg.thermal_ok;
    if (cfg.deformed()) {
        pt.u_plus = closed.u_plus;
        pt.u_minus = closed.u_minus;
        // Consistency of the two u forms (thermal-ratio vs deformation-ratio).
        const double ratio = cfg.lambda_th / (std::sqrt(2.0 * M_PI) * cfg.dx_min);
        const double alt_plus = (1.0 + cfg.field_split()) * ratio;
        const double alt_minus = (1.0 - cfg.field_split()) * ratio;
        if (std::abs(alt_plus - closed.u_plus) > 1e-12 * std::abs(closed.u_plus) ||
            std::abs(alt_minus - closed.u_minus) > 1e-12 * std::abs(closed.u_minus))
            throw Error("evaluate_thermo_point: inconsistent u forms");
    }

    pt.M_closed = magnetic_moment(cfg, MomentMode::closed, options.enforce_regime);
    pt.M_numeric = magnetic_moment(cfg, MomentMode::numeric_closed, options.enforce_regime);
    pt.chi_numeric = susceptibility(
        cfg, options.with_numeric_direct ? ChiRoute::direct : ChiRoute::closed,
        options.enforce_regime);

    const double field_ratio = std::abs(cfg.omega) / cfg.omega0;
    if (cfg.field == 0.0) {
        pt.chi_variant = susceptibility_zero_field(cfg);
        pt.variant_name = "zero_field";
    } else if (field_ratio <= 0.1) {
        pt.chi_variant = susceptibility_weak(cfg, false);
        pt.variant_name = "weak";
    } else if (field_ratio >= 10.0) {
        pt.chi_variant = susceptibility_strong(cfg, false);
        pt.variant_name = "strong";
    }

    if (options.with_direct) {
        auto direct = grand_potential_direct(cfg, options.cutoffs);
        pt.phi_direct = direct.value;
        pt.direct_tail_bound = direct.tail_bound;
        pt.direct_n_max = direct.n_max_used;
    }
    return pt;
}

} // namespace gupmag
