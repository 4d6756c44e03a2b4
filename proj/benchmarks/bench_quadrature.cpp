#include "gupmag/config.hpp"
#include "gupmag/quantum_numbers.hpp"
#include "gupmag/wavefunction.hpp"

#include <benchmark/benchmark.h>

static void BM_NormQuadrature(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto cfg = gupmag::make_config(1.0, 0.0, 5.0, 1.0, 1.0, 0.2);
    const auto qn = gupmag::QuantumNumbers::from_radial(n, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(gupmag::norm(qn, cfg).value);
}
BENCHMARK(BM_NormQuadrature)->Arg(0)->Arg(4)->Arg(8);
