// Command-line front end: spectrum tables, wavefunction sampling, oracle
// verification, thermodynamic points and parameter sweeps with CSV/JSON
// output.  All physical inputs are dimensionless natural units
// (hbar = m = k_B = 1, q/2mc = 1 so omega = B); see --help.

#include "gupmag/config.hpp"
#include "gupmag/oracle.hpp"
#include "gupmag/spectrum.hpp"
#include "gupmag/sweep.hpp"
#include "gupmag/thermo.hpp"
#include "gupmag/wavefunction.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace gupmag;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct CliError {
    int exit_code;
    std::string code;
    std::string message;
};

[[noreturn]] void fail(int exit_code, const std::string& code,
                       const std::string& message) {
    throw CliError{exit_code, code, message};
}

std::string error_code_for(const std::exception& e) {
    if (dynamic_cast<const GupViolation*>(&e))
        return "GUP_VIOLATION";
    if (dynamic_cast<const ThermalRegimeViolation*>(&e))
        return "THERMAL_REGIME";
    if (dynamic_cast<const RegimeError*>(&e))
        return "REGIME";
    if (dynamic_cast<const TruncationError*>(&e))
        return "TRUNCATION";
    if (dynamic_cast<const ConvergenceError*>(&e))
        return "CONVERGENCE";
    if (dynamic_cast<const RootNotBracketedError*>(&e))
        return "ROOT_NOT_BRACKETED";
    if (dynamic_cast<const DivergentMomentError*>(&e))
        return "DIVERGENT_MOMENT";
    if (dynamic_cast<const UndeformedError*>(&e))
        return "UNDEFORMED";
    if (dynamic_cast<const DomainError*>(&e))
        return "DOMAIN";
    return "ERROR";
}

// ---------------------------------------------------------------------------
// key = value configuration with # comments; CLI --set overrides file values.

using KeyValues = std::map<std::string, std::string>;

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

KeyValues load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(kExitUsage, "CONFIG_UNREADABLE", "cannot open config file " + path);
    KeyValues kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(kExitUsage, "CONFIG_SYNTAX",
                 path + ":" + std::to_string(lineno) + ": expected key = value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

void apply_sets(KeyValues& kv, const std::vector<std::string>& sets) {
    for (const auto& s : sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            fail(kExitUsage, "SET_SYNTAX", "--set expects key=value, got " + s);
        kv[trim(s.substr(0, eq))] = trim(s.substr(eq + 1));
    }
}

double get_double(const KeyValues& kv, const std::string& key, double fallback) {
    auto it = kv.find(key);
    if (it == kv.end())
        return fallback;
    try {
        std::size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos != it->second.size())
            throw std::invalid_argument(key);
        return v;
    } catch (const std::exception&) {
        fail(kExitUsage, "VALUE_INVALID",
             "key " + key + " has non-numeric value '" + it->second + "'");
    }
}

long get_long(const KeyValues& kv, const std::string& key, long fallback) {
    auto it = kv.find(key);
    if (it == kv.end())
        return fallback;
    try {
        return std::stol(it->second);
    } catch (const std::exception&) {
        fail(kExitUsage, "VALUE_INVALID",
             "key " + key + " has non-integer value '" + it->second + "'");
    }
}

bool get_bool(const KeyValues& kv, const std::string& key, bool fallback) {
    return get_long(kv, key, fallback ? 1 : 0) != 0;
}

SystemConfig config_from_keys(const KeyValues& kv) {
    GupParams gup;
    gup.beta = get_double(kv, "beta", 0.0);
    gup.beta_prime = get_double(kv, "beta_prime", 0.0);
    gup.gamma_rep = get_double(kv, "gamma_rep", 0.0);
    gup.dim = static_cast<int>(get_long(kv, "dim", 2));
    const auto check = get_bool(kv, "relax_thermal", false) ? ThermalCheck::relaxed
                                                            : ThermalCheck::strict;
    return make_config(get_double(kv, "omega0", 1.0), get_double(kv, "B", 0.0),
                       get_double(kv, "T", 10.0), get_double(kv, "V", 1.0),
                       get_double(kv, "z", 1.0), gup, check);
}

// ---------------------------------------------------------------------------
// Shared output plumbing.

struct OutputSpec {
    std::string format = "csv"; // csv | json
    std::string path;           // empty = stdout
    bool no_meta = false;
};

void stamp_meta(SweepTable& table, const std::string& command) {
    table.set_meta("tool", "gupmag");
    table.set_meta("command", command);
    const auto now = std::chrono::system_clock::now();
    table.set_meta("generated_unix",
                   std::to_string(std::chrono::duration_cast<std::chrono::seconds>(
                                      now.time_since_epoch())
                                      .count()));
}

void emit(const SweepTable& table, const OutputSpec& out) {
    const std::string text = out.format == "json" ? table.to_json(!out.no_meta)
                                                  : table.to_csv(!out.no_meta);
    if (out.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f)
        fail(kExitUsage, "OUT_UNWRITABLE", "cannot open output path " + out.path);
    f << text;
}

struct RangeSpec {
    double lo = 0.0, hi = 0.0;
    int count = 0;
    bool log_spacing = false;
};

RangeSpec parse_range(const std::string& text) {
    // LO:HI:N[:log]
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':'))
        parts.push_back(item);
    if (parts.size() < 3 || parts.size() > 4)
        fail(kExitUsage, "RANGE_INVALID", "--range expects LO:HI:N[:log]");
    RangeSpec r;
    try {
        r.lo = std::stod(parts[0]);
        r.hi = std::stod(parts[1]);
        r.count = std::stoi(parts[2]);
    } catch (const std::exception&) {
        fail(kExitUsage, "RANGE_INVALID", "--range has non-numeric fields");
    }
    if (parts.size() == 4) {
        if (parts[3] != "log" && parts[3] != "linear")
            fail(kExitUsage, "RANGE_INVALID", "--range spacing must be log|linear");
        r.log_spacing = parts[3] == "log";
    }
    if (!(r.hi > r.lo))
        fail(kExitUsage, "RANGE_INVALID", "--range needs hi > lo");
    if (r.count < 2)
        fail(kExitUsage, "RANGE_INVALID", "--range needs at least 2 points");
    if (r.log_spacing && !(r.lo > 0.0))
        fail(kExitUsage, "RANGE_INVALID", "--range log spacing needs lo > 0");
    return r;
}

Cell opt_cell(const std::optional<double>& v) {
    if (v.has_value())
        return *v;
    return std::monostate{};
}

// ---------------------------------------------------------------------------
// spectrum

int cmd_spectrum(const KeyValues& kv, const OutputSpec& out) {
    const auto cfg = config_from_keys(kv);
    const int max_N = static_cast<int>(get_long(kv, "n_max", 8));
    const double tol = get_double(kv, "degeneracy_tol", 1e-9);
    const auto table_deg =
        degeneracy_table(cfg, max_N, tol, EnergyFormula::first_order);

    SweepTable table({"schema_version", "n", "l", "n_d", "n_g", "E_exact",
                      "E_first_order", "class_id", "multiplicity"});
    stamp_meta(table, "spectrum");
    for (int N = 0; N <= max_N; ++N)
        for (int l = -N; l <= N; ++l) {
            if ((N - std::abs(l)) % 2 != 0)
                continue;
            const int n = (N - std::abs(l)) / 2;
            const auto qn = QuantumNumbers::from_radial(n, l);
            const int cls = table_deg.class_of(qn.n_d(), qn.n_g());
            const long mult = cls >= 0 ? table_deg.classes[cls].multiplicity() : 0;
            table.add_row({long(SweepTable::kSchemaVersion), long(n), long(l),
                           long(qn.n_d()), long(qn.n_g()),
                           energy_exact(qn, 0.0, cfg).energy,
                           energy_first_order(qn.n_d(), qn.n_g(), 0.0, cfg),
                           long(cls), mult});
        }
    emit(table, out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// wavefn

int cmd_wavefn(const KeyValues& kv, const OutputSpec& out) {
    const auto cfg = config_from_keys(kv);
    if (!cfg.deformed())
        fail(kExitUsage, "UNDEFORMED",
             "wavefn requires beta > 0 (no deformed eigenfunctions at beta=0)");
    const int n = static_cast<int>(get_long(kv, "n", 0));
    const int l = static_cast<int>(get_long(kv, "l", 0));
    const int points = static_cast<int>(get_long(kv, "points", 256));
    const double p_max = get_double(kv, "p_max", 20.0 / std::sqrt(cfg.gup.beta));
    if (points < 2)
        fail(kExitUsage, "VALUE_INVALID", "points must be >= 2");

    RadialWavefunction R(QuantumNumbers::from_radial(n, l), cfg);
    SweepTable table({"schema_version", "p", "R"});
    stamp_meta(table, "wavefn");
    for (int i = 0; i < points; ++i) {
        const double p = p_max * double(i) / (points - 1);
        table.add_row({long(SweepTable::kSchemaVersion), p, R(p)});
    }
    emit(table, out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const KeyValues& kv, double perturb_energy) {
    const auto cfg = config_from_keys(kv);
    if (!cfg.deformed())
        fail(kExitUsage, "UNDEFORMED_NOT_VERIFIABLE",
             "verify requires beta > 0; the oracle checks deformed solutions");

    const int grid_n = static_cast<int>(get_long(kv, "verify_grid", 2048));
    const int eigen_k = static_cast<int>(get_long(kv, "verify_k", 4));
    const int l_max = static_cast<int>(get_long(kv, "verify_lmax", 2));
    const double residual_tol = get_double(kv, "residual_tol", 1e-6);
    const double eigen_tol = get_double(kv, "eigen_tol", 1e-6);
    const double gram_tol = get_double(kv, "gram_tol", 1e-7);

    bool all_ok = true;
    std::printf("verify: beta=%g epsilon=%g grid=%d\n", cfg.gup.beta, cfg.epsilon,
                grid_n);

    RadialGrid grid(cfg.gup.beta, grid_n);
    std::printf("-- radial equation residuals (perturbation %g)\n", perturb_energy);
    for (auto [n, l] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}}) {
        const double r = residual_check(QuantumNumbers::from_radial(n, l), cfg,
                                        grid, perturb_energy);
        const bool ok = r <= residual_tol;
        all_ok = all_ok && ok;
        std::printf("   (n=%d,l=%d) residual %.3e  [%s]\n", n, l, r,
                    ok ? "PASS" : "FAIL");
    }

    std::printf("-- finite-difference eigensolver vs analytic spectrum\n");
    for (int l = 0; l <= l_max; ++l) {
        const auto rich = fd_eigensolve_richardson(l, cfg, eigen_k, grid_n);
        for (int i = 0; i < eigen_k; ++i) {
            const double analytic = analytic_dimensionless_energy(
                QuantumNumbers::from_radial(i, l), cfg.epsilon);
            const double rel =
                std::abs(rich.extrapolated[i] - analytic) / std::abs(analytic);
            const bool ok = rel <= eigen_tol;
            all_ok = all_ok && ok;
            std::printf("   l=%d k=%d fd=%.12g analytic=%.12g rel=%.3e [%s]\n", l,
                        i, rich.extrapolated[i], analytic, rel,
                        ok ? "PASS" : "FAIL");
        }
    }

    std::printf("-- orthonormality (n <= 3, l <= 1)\n");
    double worst = 0.0;
    for (int l = 0; l <= 1; ++l)
        for (int a = 0; a <= 3; ++a)
            for (int b = a; b <= 3; ++b) {
                const double o = overlap(a, b, l, cfg);
                worst = std::max(worst, std::abs(o - (a == b ? 1.0 : 0.0)));
            }
    const bool gram_ok = worst <= gram_tol;
    all_ok = all_ok && gram_ok;
    std::printf("   max |Gram - I| = %.3e  [%s]\n", worst, gram_ok ? "PASS" : "FAIL");

    std::printf("verify: %s\n", all_ok ? "PASS" : "FAIL");
    return all_ok ? kExitOk : kExitVerifyFail;
}

// ---------------------------------------------------------------------------
// thermo / sweep

const std::vector<std::string> kThermoColumns = {
    "schema_version", "index", "B", "T", "beta", "omega0", "epsilon",
    "lambda_over_dxmin", "phi_direct", "phi_closed", "phi_intermediate",
    "M_closed", "M_numeric", "chi_numeric", "chi_variant", "variant_name",
    "u_plus", "u_minus", "regime_ok", "thermal_ok", "status"};

std::vector<Cell> thermo_row(int index, const SystemConfig& cfg,
                             const ThermoOptions& options) {
    const auto pt = evaluate_thermo_point(cfg, options);
    return {long(SweepTable::kSchemaVersion),
            long(index),
            pt.field,
            pt.temperature,
            pt.beta,
            pt.omega0,
            pt.epsilon,
            opt_cell(pt.lambda_over_dxmin),
            opt_cell(pt.phi_direct),
            pt.phi_closed,
            pt.phi_intermediate,
            pt.M_closed,
            pt.M_numeric,
            pt.chi_numeric,
            opt_cell(pt.chi_variant),
            pt.variant_name,
            opt_cell(pt.u_plus),
            opt_cell(pt.u_minus),
            long(pt.regime_ok ? 1 : 0),
            long(pt.thermal_ok ? 1 : 0),
            std::string("ok")};
}

std::vector<Cell> flagged_row(int index, const std::string& var, double value,
                              const KeyValues& kv, const std::string& code) {
    // Rectangular error row: inputs recorded, numeric results left empty.
    std::vector<Cell> row(kThermoColumns.size(), std::monostate{});
    row[0] = long(SweepTable::kSchemaVersion);
    row[1] = long(index);
    row[2] = var == "B" ? Cell{value} : Cell{get_double(kv, "B", 0.0)};
    row[3] = var == "T" ? Cell{value} : Cell{get_double(kv, "T", 10.0)};
    row[4] = var == "beta" ? Cell{value} : Cell{get_double(kv, "beta", 0.0)};
    row[5] = var == "omega0" ? Cell{value} : Cell{get_double(kv, "omega0", 1.0)};
    row.back() = std::string("error:") + code;
    return row;
}

ThermoOptions thermo_options_from_keys(const KeyValues& kv) {
    ThermoOptions options;
    options.with_direct = get_bool(kv, "direct", true);
    options.enforce_regime = get_bool(kv, "enforce_regime", false);
    options.cutoffs.maxwell_boltzmann = get_bool(kv, "maxwell_boltzmann", true);
    options.cutoffs.tail_rel_tol = get_double(kv, "tail_tol", 1e-8);
    return options;
}

int cmd_thermo(const KeyValues& kv, const OutputSpec& out) {
    const auto cfg = config_from_keys(kv);
    const auto options = thermo_options_from_keys(kv);
    SweepTable table(kThermoColumns);
    stamp_meta(table, "thermo");
    table.add_row(thermo_row(0, cfg, options));
    emit(table, out);
    return kExitOk;
}

int cmd_sweep(const KeyValues& kv, const OutputSpec& out, const std::string& var,
              const std::string& range_text, bool baseline_beta0, int workers) {
    if (var != "B" && var != "T" && var != "beta" && var != "omega0")
        fail(kExitUsage, "VAR_INVALID", "--var must be one of B|T|beta|omega0");
    const RangeSpec range = parse_range(range_text);
    const auto options = thermo_options_from_keys(kv);

    // The base (unswept) configuration must itself be valid; per-point
    // construction failures along the axis become flagged rows.
    (void)config_from_keys(kv);

    SweepAxis axis{var, range.lo, range.hi, range.count, range.log_spacing};
    const auto grid = axis.grid();

    auto columns = kThermoColumns;
    if (baseline_beta0) {
        columns.push_back("chi_beta0");
        columns.push_back("chi_diff");
        columns.push_back("B1");
        columns.push_back("B2");
    }

    // Critical fields of the deformed family against the beta = 0 baseline,
    // found once per run when requested (meaningful for a B sweep).
    std::optional<CriticalFields> crit;
    if (baseline_beta0 && var == "B" && get_double(kv, "beta", 0.0) > 0.0) {
        try {
            auto kv_relaxed = kv;
            kv_relaxed["relax_thermal"] = "1";
            // Scan only the constructible part of the range: the GUP bound
            // epsilon < 1 caps the field at omega < sqrt(1/beta^2 - w0^2).
            const double beta = get_double(kv, "beta", 0.0);
            const double w0 = get_double(kv, "omega0", 1.0);
            double b_hi = range.hi;
            if (1.0 / beta > w0) {
                const double b_gup =
                    std::sqrt(1.0 / (beta * beta) - w0 * w0) * 0.999;
                b_hi = std::min(b_hi, b_gup);
            }
            crit = critical_fields(config_from_keys(kv_relaxed), b_hi,
                                   ChiRoute::closed);
        } catch (const Error&) {
            // no two crossings in range (or family unconstructible):
            // reported through empty B1/B2 cells
        }
    }

    auto point = [&](int index, double value) -> std::vector<Cell> {
        auto kv_point = kv;
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", value);
        kv_point[var] = buf;
        try {
            const auto cfg = config_from_keys(kv_point);
            auto row = thermo_row(index, cfg, options);
            if (baseline_beta0) {
                auto kv_base = kv_point;
                kv_base["beta"] = "0";
                const auto base = config_from_keys(kv_base);
                const double chi0 =
                    susceptibility(base, ChiRoute::closed, options.enforce_regime);
                const double chi =
                    susceptibility(cfg, ChiRoute::closed, options.enforce_regime);
                row.push_back(chi0);
                row.push_back(chi - chi0);
                row.push_back(crit ? Cell{crit->B1} : Cell{std::monostate{}});
                row.push_back(crit ? Cell{crit->B2} : Cell{std::monostate{}});
            }
            return row;
        } catch (const std::exception& e) {
            auto row = flagged_row(index, var, value, kv, error_code_for(e));
            if (baseline_beta0)
                for (int i = 0; i < 4; ++i)
                    row.push_back(std::monostate{});
            return row;
        }
    };

    auto table = run_sweep(columns, grid, point, workers);
    stamp_meta(table, "sweep");
    table.set_meta("var", var);
    emit(table, out);
    return kExitOk;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
    CLI::App app{"gupmag: minimal-length Landau levels and electron magnetism.\n"
                 "Inputs are dimensionless natural units: hbar = m = k_B = 1 and\n"
                 "q/(2mc) = 1, so the cyclotron frequency equals B numerically,\n"
                 "energies are in units of hbar*omega0 when omega0 = 1, and\n"
                 "lengths in units of sqrt(hbar/(m*omega0))."};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> sets;
    OutputSpec out;
    int workers = 1;

    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--set", sets, "override a config key (repeatable)");
    app.add_option("--format", out.format, "output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out.path, "output path (default stdout)");
    app.add_flag("--no-meta", out.no_meta, "suppress the metadata header");
    app.add_option("--workers", workers, "sweep worker threads")
        ->check(CLI::PositiveNumber);

    auto* sub_spectrum =
        app.add_subcommand("spectrum", "energy levels and degeneracy classes");
    sub_spectrum->fallthrough();
    auto* sub_wavefn =
        app.add_subcommand("wavefn", "sample a radial momentum eigenfunction");
    sub_wavefn->fallthrough();
    auto* sub_verify = app.add_subcommand(
        "verify", "independent oracle checks of spectrum and eigenfunctions");
    sub_verify->fallthrough();
    double perturb_energy = 0.0;
    sub_verify->add_option("--perturb-energy", perturb_energy,
                           "debug: shift the analytic eigenvalue to force a "
                           "residual plateau");
    auto* sub_thermo =
        app.add_subcommand("thermo", "one thermodynamic evaluation point");
    sub_thermo->fallthrough();
    auto* sub_sweep =
        app.add_subcommand("sweep", "sweep one variable, emit a table");
    sub_sweep->fallthrough();
    std::string var, range_text;
    bool baseline_beta0 = false;
    sub_sweep->add_option("--var", var, "swept variable: B|T|beta|omega0")
        ->required();
    sub_sweep->add_option("--range", range_text, "LO:HI:N[:log]")->required();
    sub_sweep->add_flag("--baseline-beta0", baseline_beta0,
                        "add beta = 0 baseline susceptibility, difference and "
                        "critical fields");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help
            return app.exit(e);
        std::fprintf(stderr, "error code=USAGE message=\"%s\"\n", e.what());
        return kExitUsage;
    }

    KeyValues kv;
    if (!config_path.empty())
        kv = load_config_file(config_path);
    apply_sets(kv, sets);

    if (sub_spectrum->parsed())
        return cmd_spectrum(kv, out);
    if (sub_wavefn->parsed())
        return cmd_wavefn(kv, out);
    if (sub_verify->parsed())
        return cmd_verify(kv, perturb_energy);
    if (sub_thermo->parsed())
        return cmd_thermo(kv, out);
    if (sub_sweep->parsed())
        return cmd_sweep(kv, out, var, range_text, baseline_beta0, workers);
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::fprintf(stderr, "error code=%s message=\"%s\"\n", e.code.c_str(),
                     e.message.c_str());
        return e.exit_code;
    } catch (const GupViolation& e) {
        std::fprintf(stderr, "error code=GUP_VIOLATION message=\"%s\"\n", e.what());
        return kExitUsage;
    } catch (const ThermalRegimeViolation& e) {
        std::fprintf(stderr, "error code=THERMAL_REGIME message=\"%s\"\n", e.what());
        return kExitUsage;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error code=DOMAIN message=\"%s\"\n", e.what());
        return kExitUsage;
    } catch (const Error& e) {
        std::fprintf(stderr, "error code=%s message=\"%s\"\n",
                     error_code_for(e).c_str(), e.what());
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error code=INTERNAL message=\"%s\"\n", e.what());
        return kExitNumerical;
    }
}
