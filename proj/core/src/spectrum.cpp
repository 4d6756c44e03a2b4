#include "gupmag/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace gupmag {

double lambda_exponent(double epsilon, int l, LambdaBranch branch) {
    if (!(epsilon > 0.0))
        throw DomainError("lambda_exponent: epsilon must be > 0 "
                          "(undeformed case has no lambda)");
    const double root = std::sqrt(1.0 + epsilon * epsilon * (1.0 + double(l) * l));
    return branch == LambdaBranch::upper ? 1.0 + root / epsilon
                                         : 1.0 - root / epsilon;
}

SpectrumLevel energy_exact(QuantumNumbers qn, double pz, const SystemConfig& cfg) {
    const auto& u = natural_units();
    const double wt = cfg.omega_tilde;
    const double N = qn.principal();
    const double l2 = double(qn.l) * qn.l;
    const double kinetic = pz * pz / (2.0 * u.mass);

    SpectrumLevel level;
    level.qn = qn;
    level.pz = pz;
    level.branch = LambdaBranch::upper;

    if (!cfg.deformed()) {
        // Fock-Darwin closed form; lambda is undefined at beta = 0.
        level.energy = kinetic + u.hbar * wt * (N + 1.0) + u.hbar * cfg.omega * qn.l / 2.0;
        return level;
    }

    const double eps = cfg.epsilon;
    level.lambda_exp = lambda_exponent(eps, qn.l, LambdaBranch::upper);
    level.energy = kinetic +
                   u.hbar * wt * ((N + 1.0) * std::sqrt(1.0 + eps * eps * (1.0 + l2)) +
                                  0.5 * eps * (N * N + l2 + 2.0 * N + 2.0) +
                                  cfg.field_split() * qn.l);
    return level;
}

double energy_first_order(int n_d, int n_g, double pz, const SystemConfig& cfg) {
    if (n_d < 0 || n_g < 0)
        throw DomainError("energy_first_order: n_d, n_g must be >= 0");
    const auto& u = natural_units();
    const double wt = cfg.omega_tilde;
    const double eps = cfg.epsilon;
    const double x = cfg.field_split();
    return pz * pz / (2.0 * u.mass) +
           u.hbar * wt * (1.0 + eps) +
           u.hbar * wt * ((1.0 + eps + x) * n_d + eps * double(n_d) * n_d) +
           u.hbar * wt * ((1.0 + eps - x) * n_g + eps * double(n_g) * n_g);
}

namespace {

bool weak_regime(const SystemConfig& cfg) {
    const double r = std::abs(cfg.omega) / cfg.omega0;
    return r > 0.0 && r <= 0.1;
}

bool strong_regime(const SystemConfig& cfg) {
    return std::abs(cfg.omega) / cfg.omega0 >= 10.0;
}

} // namespace

RegimeValue weak_field_energy(HalfInt gamma_q, HalfInt rho_q, const SystemConfig& cfg) {
    const auto& u = natural_units();
    const double g = gamma_q.value();
    const double r = rho_q.value();
    const double w0 = cfg.omega0;
    const double eps0 = u.mass * u.hbar * w0 * cfg.gup.beta;
    const double value =
        2.0 * u.hbar * w0 * ((g + 0.5) + eps0 * (g * (g + 1.0) + r * r + 0.5));
    return {value, weak_regime(cfg)};
}

RegimeValue strong_field_energy(HalfInt gamma_q, HalfInt rho_q, const SystemConfig& cfg) {
    const auto& u = natural_units();
    const double g = gamma_q.value();
    const double r = rho_q.value();
    const double w = std::abs(cfg.omega);
    const double eps_s = u.mass * u.hbar * w * cfg.gup.beta;
    const double value =
        2.0 * u.hbar * w * ((g + 0.5 * (1.0 + r)) + eps_s * (g * (g + 1.0) + r * r));
    return {value, strong_regime(cfg)};
}

int DegeneracyTable::class_of(int n_d, int n_g) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (const auto& m : classes[c].members)
            if (m.first == n_d && m.second == n_g)
                return static_cast<int>(c);
    return -1;
}

namespace {

double level_energy(EnergyFormula formula, int n_d, int n_g, const SystemConfig& cfg) {
    switch (formula) {
    case EnergyFormula::exact:
        return energy_exact(QuantumNumbers::from_circular(n_d, n_g), 0.0, cfg).energy;
    case EnergyFormula::first_order:
        return energy_first_order(n_d, n_g, 0.0, cfg);
    case EnergyFormula::weak:
        return weak_field_energy(HalfInt{n_d + n_g}, HalfInt{n_d - n_g}, cfg).value;
    case EnergyFormula::strong:
        return strong_field_energy(HalfInt{n_d + n_g}, HalfInt{n_d - n_g}, cfg).value;
    }
    throw DomainError("degeneracy_table: unknown formula");
}

/// Integer class key when the beta = 0 spectrum is exactly rational in the
/// level labels; nullopt otherwise.
std::optional<long> exact_key(EnergyFormula formula, int n_d, int n_g,
                              const SystemConfig& cfg) {
    if (cfg.deformed())
        return std::nullopt;
    switch (formula) {
    case EnergyFormula::exact:
    case EnergyFormula::first_order:
        if (cfg.omega == 0.0)
            return long(n_d) + n_g; // E = hbar w0 (N + 1)
        return std::nullopt;
    case EnergyFormula::weak:
        return long(n_d) + n_g; // E = hbar w0 (N + 1), rho-independent
    case EnergyFormula::strong:
        return 3L * n_d + n_g; // E = hbar w (1 + 3 n_d/2 + n_g/2), doubled
    }
    return std::nullopt;
}

} // namespace

DegeneracyTable degeneracy_table(const SystemConfig& cfg, int max_N, double tol,
                                 EnergyFormula formula) {
    if (!(tol > 0.0))
        throw DomainError("degeneracy_table: tol must be > 0");
    if (max_N < 0 || max_N > 64)
        throw DomainError("degeneracy_table: max_N must be in [0, 64]");

    struct Entry {
        double energy;
        std::optional<long> key;
        int n_d, n_g;
    };
    std::vector<Entry> entries;
    for (int n_d = 0; n_d <= max_N; ++n_d)
        for (int n_g = 0; n_d + n_g <= max_N; ++n_g)
            entries.push_back({level_energy(formula, n_d, n_g, cfg),
                               exact_key(formula, n_d, n_g, cfg), n_d, n_g});

    DegeneracyTable table;

    const bool all_keyed = std::all_of(entries.begin(), entries.end(),
                                       [](const Entry& e) { return e.key.has_value(); });
    if (all_keyed) {
        std::map<long, DegeneracyClass> by_key;
        for (const auto& e : entries) {
            auto& cls = by_key[*e.key];
            cls.energy = e.energy;
            cls.members.emplace_back(e.n_d, e.n_g);
        }
        for (auto& [key, cls] : by_key)
            table.classes.push_back(std::move(cls));
        return table;
    }

    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.energy < b.energy; });
    for (const auto& e : entries) {
        const double scale = std::max(std::abs(e.energy), 1.0);
        if (table.classes.empty() ||
            std::abs(e.energy - table.classes.back().energy) > tol * scale) {
            DegeneracyClass cls;
            cls.energy = e.energy;
            table.classes.push_back(cls);
        }
        table.classes.back().members.emplace_back(e.n_d, e.n_g);
    }
    return table;
}

} // namespace gupmag
