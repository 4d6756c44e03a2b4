#include "gupmag/jacobi.hpp"

#include <benchmark/benchmark.h>

static void BM_JacobiEvaluation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    double x = -1.0;
    for (auto _ : state) {
        x += 1e-6;
        if (x > 1.0)
            x = -1.0;
        benchmark::DoNotOptimize(gupmag::jacobi(n, 4.3, 1.0, x));
    }
}
BENCHMARK(BM_JacobiEvaluation)->Arg(8)->Arg(64)->Arg(200);
