// Serial reference kernels against their OpenMP counterparts.
//
//   ./rgpd_bench --benchmark_filter=Gamma

#include <benchmark/benchmark.h>

#include "rgpd/chord.hpp"
#include "rgpd/kernels.hpp"
#include "rgpd/verify.hpp"

namespace {

void BM_GammaSerial(benchmark::State& state) {
    const auto g = rgpd::bouquet_bn(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rgpd::kernels::gamma_serial(g));
    state.SetItemsProcessed(state.iterations() * (1LL << state.range(0)));
}

void BM_GammaParallel(benchmark::State& state) {
    const auto g = rgpd::bouquet_bn(static_cast<int>(state.range(0)));
    const int workers = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(rgpd::kernels::gamma_parallel(g, workers));
    state.SetItemsProcessed(state.iterations() * (1LL << state.range(0)));
}

void BM_ScanSerial(benchmark::State& state) {
    const auto diagrams = rgpd::enumerate_diagrams(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rgpd::verify::scan_serial(diagrams));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(diagrams.size()));
}

void BM_ScanParallel(benchmark::State& state) {
    const auto diagrams = rgpd::enumerate_diagrams(static_cast<int>(state.range(0)));
    const int workers = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(rgpd::verify::scan_parallel(diagrams, workers));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(diagrams.size()));
}

}  // namespace

BENCHMARK(BM_GammaSerial)->Arg(14)->Arg(18)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GammaParallel)->ArgsProduct({{14, 18, 20}, {2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->ArgsProduct({{6, 7}, {2, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
