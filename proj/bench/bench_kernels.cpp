// Serial reference vs OpenMP kernels for the three partitionable
// operations. Run with --benchmark_filter=... to narrow.

#include "palinseq/ap_analysis.hpp"
#include "palinseq/gp_analysis.hpp"
#include "palinseq/palindrome_seq.hpp"

#include <benchmark/benchmark.h>

using palinseq::Natural;

static void BM_GapsSerial(benchmark::State& state) {
    const Natural hi(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(palinseq::serial::gaps_in_range(Natural(1), hi));
}
BENCHMARK(BM_GapsSerial)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

static void BM_GapsParallel(benchmark::State& state) {
    const Natural hi(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(palinseq::gaps_in_range(Natural(1), hi));
}
BENCHMARK(BM_GapsParallel)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

static void BM_DensitySerial(benchmark::State& state) {
    const Natural length(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(palinseq::serial::count_palindromes_divisible(length, Natural(7), 13));
}
BENCHMARK(BM_DensitySerial)->Arg(9)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_DensityParallel(benchmark::State& state) {
    const Natural length(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(palinseq::count_palindromes_divisible(length, Natural(7), 13));
}
BENCHMARK(BM_DensityParallel)->Arg(9)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_ApSearchSerial(benchmark::State& state) {
    const Natural bound(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(palinseq::serial::exhaustive_ap_search(bound, Natural(3)));
}
BENCHMARK(BM_ApSearchSerial)->Arg(20'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

static void BM_ApSearchParallel(benchmark::State& state) {
    const Natural bound(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(palinseq::exhaustive_ap_search(bound, Natural(3)));
}
BENCHMARK(BM_ApSearchParallel)->Arg(20'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
