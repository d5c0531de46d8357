// Basis enumeration: serial reference walk vs the sharded OpenMP kernel, plus
// the order kernel on its own.

#include <benchmark/benchmark.h>

#include "cycorder/spectrum.hpp"
#include "cycorder/sumset.hpp"

using namespace cycorder;

static void BM_EnumerateReference(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerateBasesReference(n, EnumerationMode::exhaustive()));
}
BENCHMARK(BM_EnumerateReference)->DenseRange(12, 16, 2)->Unit(benchmark::kMillisecond);

static void BM_EnumerateKernel(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    EnumerationOptions options;
    options.shards = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(enumerateBases(n, EnumerationMode::exhaustive(), options));
}
BENCHMARK(BM_EnumerateKernel)->ArgsProduct({{12, 14, 16, 18}, {1, 8}})->Unit(benchmark::kMillisecond);

static void BM_EnumerateCapped(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    EnumerationOptions options;
    options.shards = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(enumerateBases(n, EnumerationMode::cardCapped(5), options));
}
BENCHMARK(BM_EnumerateCapped)->ArgsProduct({{60, 120}, {1, 8}})->Unit(benchmark::kMillisecond);

static void BM_Order(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const ZnSet a(n, {0, 1, 3});
    for (auto _ : state) benchmark::DoNotOptimize(order(a));
}
BENCHMARK(BM_Order)->RangeMultiplier(8)->Range(64, 1 << 15);

BENCHMARK_MAIN();
