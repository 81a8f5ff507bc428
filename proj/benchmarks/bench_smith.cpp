#include <benchmark/benchmark.h>

#include "homcalc/exact.hpp"

using namespace homcalc;

namespace {

IntegerMatrix seeded_matrix(std::uint64_t seed, std::size_t n, long span) {
    std::uint64_t state = seed;
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            m.at(i, j) = static_cast<long>((state >> 33) % (2 * span + 1)) - span;
        }
    return m;
}

} // namespace

static void BM_SmithNormalForm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const IntegerMatrix m = seeded_matrix(0xbe7c4 + n, n, 9);
    for (auto _ : state) {
        auto snf = smith_normal_form(m);
        benchmark::DoNotOptimize(snf.diagonal);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

static void BM_KernelBasisMod(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const IntegerMatrix m = seeded_matrix(0xfeed + n, n, 4);
    for (auto _ : state) {
        auto k = kernel_basis(m, Int(6));
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_KernelBasisMod)->Arg(8)->Arg(16);

static void BM_CokernelPresentation(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const IntegerMatrix m = seeded_matrix(0xc0de + n, n, 9);
    for (auto _ : state) {
        auto c = cokernel_presentation(m);
        benchmark::DoNotOptimize(c.group);
    }
}
BENCHMARK(BM_CokernelPresentation)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
