#include <benchmark/benchmark.h>

#include "homcalc/bockstein.hpp"
#include "homcalc/products.hpp"
#include "homcalc/spaces.hpp"

using namespace homcalc;

static void BM_ProductHomology(benchmark::State& state) {
    const long d = state.range(0);
    const ChainComplex b = bzp_skeleton(3, d);
    const ChainComplex t = tensor_complex(b, b);
    const int degree = static_cast<int>(d);
    for (auto _ : state) {
        auto g = homology(t, degree, Int(0));
        benchmark::DoNotOptimize(g->presentation);
    }
}
BENCHMARK(BM_ProductHomology)->Arg(8)->Arg(12)->Arg(16);

static void BM_BocksteinSuite(benchmark::State& state) {
    const ChainComplex b = bzp_skeleton(3, static_cast<long>(state.range(0)));
    for (auto _ : state) {
        auto report = verify_bockstein_les(b, Int(3), static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_BocksteinSuite)->Arg(8)->Arg(12);

static void BM_KunnethDegree7(benchmark::State& state) {
    const ChainComplex l7 = lens_space(3, 4);
    for (auto _ : state) {
        auto dec = kunneth(l7, l7, 7, Int(0));
        benchmark::DoNotOptimize(dec.consistent);
    }
}
BENCHMARK(BM_KunnethDegree7);

BENCHMARK_MAIN();
