#include <benchmark/benchmark.h>

#include <nearring/classification.hpp>
#include <nearring/primes.hpp>

using namespace nearring;

static void BM_EnumerateOverlaps(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_overlaps(ComplexContext{k}));
    state.SetComplexityN(k);
}
BENCHMARK(BM_EnumerateOverlaps)->Arg(12)->Arg(24)->Arg(30)->Arg(42)->Arg(60)->Complexity();

static void BM_EnumerateOverlapsDirect(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_overlaps_direct(ComplexContext{k}));
    state.SetComplexityN(k);
}
BENCHMARK(BM_EnumerateOverlapsDirect)->Arg(12)->Arg(18)->Arg(24)->Complexity();

static void BM_QuadNorm(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    Quad q{1, 2, 3, static_cast<unsigned>(k - 2), k};
    for (auto _ : state) benchmark::DoNotOptimize(quad_norm(q, 1));
}
BENCHMARK(BM_QuadNorm)->Arg(7)->Arg(12)->Arg(30);

static void BM_ExceptionalPrimes(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    PrimeSearchOptions opt;
    opt.dedupe = state.range(1) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(exceptional_primes(k, opt));
}
BENCHMARK(BM_ExceptionalPrimes)
    ->Args({7, 0})
    ->Args({7, 1})
    ->Args({9, 0})
    ->Args({9, 1})
    ->Args({10, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_VerifyClassification(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_classification(k));
    state.SetComplexityN(k);
}
BENCHMARK(BM_VerifyClassification)->Arg(12)->Arg(24)->Arg(36)->Complexity();

BENCHMARK_MAIN();
