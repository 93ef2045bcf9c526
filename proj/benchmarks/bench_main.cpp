#include <complex>

#include <benchmark/benchmark.h>

#include "edsum/elliptic.hpp"
#include "edsum/elliptic_sums.hpp"
#include "edsum/exact.hpp"
#include "edsum/scan.hpp"

namespace {

using namespace edsum;

void BM_QValue(benchmark::State& state) {
  const auto route = static_cast<Route>(state.range(0));
  const auto pair = CoprimePair::make(state.range(1) - 1, state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(q_value(pair, route));
  state.SetLabel(std::string(to_string(route)));
}
BENCHMARK(BM_QValue)
    ->ArgsProduct({{static_cast<int>(Route::MainResult), static_cast<int>(Route::RaoRoute),
                    static_cast<int>(Route::EuclideanDescent)},
                   {101, 10001, 1000001}});

void BM_EllipticSum(benchmark::State& state) {
  const auto ctx = build_context(std::complex<double>(0.3, 1.5));
  const auto pair = CoprimePair::make(state.range(0) - 1, state.range(0));
  const auto mode = state.range(1) ? LatticeEvaluation::Direct : LatticeEvaluation::Tabulated;
  for (auto _ : state) benchmark::DoNotOptimize(elliptic_sum(pair, ctx, mode).value);
}
BENCHMARK(BM_EllipticSum)->ArgsProduct({{8, 32, 128}, {0, 1}});

void BM_BuildContext(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_context(std::complex<double>(0.3, 1.5)).lambda());
}
BENCHMARK(BM_BuildContext);

void BM_Scan(benchmark::State& state) {
  ScanOptions options;
  options.workers = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        conjecture_scan({1, state.range(0)}, {1, state.range(0) / 2}, ConjectureLaw::Mod4, options).checked);
}
BENCHMARK(BM_Scan)->ArgsProduct({{200, 600}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
