#include "gupmag/config.hpp"
#include "gupmag/oracle.hpp"

#include <benchmark/benchmark.h>

static void BM_FdEigensolve(benchmark::State& state) {
    const int points = static_cast<int>(state.range(0));
    auto cfg = gupmag::make_config(1.0, 0.0, 5.0, 1.0, 1.0, 0.1);
    gupmag::RadialGrid grid(cfg.gup.beta, points);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            gupmag::fd_eigensolve(0, cfg, grid, 6).eigenvalues);
}
BENCHMARK(BM_FdEigensolve)->Arg(1024)->Arg(2048)->Arg(4096)
    ->Unit(benchmark::kMillisecond);

static void BM_ResidualCheck(benchmark::State& state) {
    const int points = static_cast<int>(state.range(0));
    auto cfg = gupmag::make_config(1.0, 0.0, 5.0, 1.0, 1.0, 0.2);
    gupmag::RadialGrid grid(cfg.gup.beta, points);
    const auto qn = gupmag::QuantumNumbers::from_radial(1, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(gupmag::residual_check(qn, cfg, grid));
}
BENCHMARK(BM_ResidualCheck)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
