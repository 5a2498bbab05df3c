#include <benchmark/benchmark.h>

#include "cigenera/binomial.hpp"
#include "cigenera/series.hpp"

using cigenera::binomial_general;
using cigenera::Rational;
using cigenera::TruncatedSeries;

namespace {

TruncatedSeries dense_series(int order) {
    std::vector<Rational> c;
    for (int m = 0; m <= order; ++m) c.emplace_back(2 * m + 1, m + 3);
    return TruncatedSeries(std::move(c));
}

void BM_SeriesMul(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const TruncatedSeries s = dense_series(order);
    const TruncatedSeries t = TruncatedSeries::exp_linear(Rational(-1, 3), order);
    for (auto _ : state) {
        TruncatedSeries product = s * t;
        benchmark::DoNotOptimize(product);
    }
    state.SetComplexityN(order);
}
BENCHMARK(BM_SeriesMul)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_SeriesInverse(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const TruncatedSeries s = dense_series(order);
    for (auto _ : state) {
        TruncatedSeries inv = s.inverse();
        benchmark::DoNotOptimize(inv);
    }
    state.SetComplexityN(order);
}
BENCHMARK(BM_SeriesInverse)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_SeriesPowInt(benchmark::State& state) {
    const TruncatedSeries s = dense_series(12);
    const long e = state.range(0);
    for (auto _ : state) {
        TruncatedSeries p = s.pow_int(e);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_SeriesPowInt)->Arg(3)->Arg(12)->Arg(-12);

void BM_BinomialGeneral(benchmark::State& state) {
    const Rational a(-17, 6);
    const long k = state.range(0);
    for (auto _ : state) {
        Rational value = binomial_general(a, k);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_BinomialGeneral)->Arg(5)->Arg(15)->Arg(30);

}  // namespace
