#include <benchmark/benchmark.h>

#include "cigenera/genera_closed.hpp"
#include "cigenera/genera_oracles.hpp"
#include "cigenera/verify.hpp"

using namespace cigenera;

namespace {

const CompleteIntersection bench_space(6, {5, 4, 3});

void BM_ToddClosed(benchmark::State& state) {
    for (auto _ : state) {
        Rational v = todd_closed(bench_space);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ToddClosed);

void BM_ToddGenfun(benchmark::State& state) {
    for (auto _ : state) {
        Rational v = todd_genfun(bench_space);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ToddGenfun);

void BM_ToddChernRoot(benchmark::State& state) {
    for (auto _ : state) {
        Rational v = genus_chern_root(bench_space, todd_q_series(bench_space.dimension()));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ToddChernRoot);

void BM_ToddRecurrence(benchmark::State& state) {
    for (auto _ : state) {
        Rational v = todd_recurrence(bench_space);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ToddRecurrence);

void BM_CuspValue(benchmark::State& state) {
    for (auto _ : state) {
        Rational v = chi_K_closed(bench_space, 1, 3);  // c1 = -3
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_CuspValue);

void BM_ChiYPolynomial(benchmark::State& state) {
    const CompleteIntersection space(static_cast<int>(state.range(0)), {4, 2});
    for (auto _ : state) {
        ChiYPolynomial poly = chi_y_polynomial(space, 0);
        benchmark::DoNotOptimize(poly);
    }
}
BENCHMARK(BM_ChiYPolynomial)->Arg(2)->Arg(4)->Arg(8);

void BM_ToddTheoremSweep(benchmark::State& state) {
    verify::SweepConfig cfg;
    cfg.n_max = static_cast<int>(state.range(0));
    cfg.r_max = 2;
    cfg.d_max = 4;
    for (auto _ : state) {
        verify::SweepReport report = verify::check_theorem_todd(cfg);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_ToddTheoremSweep)->Arg(4)->Arg(6);

}  // namespace
