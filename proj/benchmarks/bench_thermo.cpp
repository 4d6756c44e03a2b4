#include "gupmag/config.hpp"
#include "gupmag/thermo.hpp"

#include <benchmark/benchmark.h>

static void BM_GrandPotentialDirect(benchmark::State& state) {
    const double T = static_cast<double>(state.range(0));
    auto cfg = gupmag::make_config(1.0, 0.5, T, 1.0, 1.0, 3e-4);
    for (auto _ : state)
        benchmark::DoNotOptimize(gupmag::grand_potential_direct(cfg).value);
}
BENCHMARK(BM_GrandPotentialDirect)->Arg(10)->Arg(25)->Arg(50)
    ->Unit(benchmark::kMillisecond);

static void BM_SusceptibilityClosed(benchmark::State& state) {
    auto cfg = gupmag::make_config(1.0, 0.4, 40.0, 1.0, 1.0, 1e-4);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            gupmag::susceptibility(cfg, gupmag::ChiRoute::closed));
}
BENCHMARK(BM_SusceptibilityClosed);

static void BM_ThermoPoint(benchmark::State& state) {
    auto cfg = gupmag::make_config(1.0, 0.5, 25.0, 1.0, 1.0, 3e-4);
    for (auto _ : state)
        benchmark::DoNotOptimize(gupmag::evaluate_thermo_point(cfg).chi_numeric);
}
BENCHMARK(BM_ThermoPoint)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
