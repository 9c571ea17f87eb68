// Serial reference loops against their OpenMP counterparts. On a single core
// the parallel variants measure scheduling overhead only.

#include <benchmark/benchmark.h>

#include "driftkl/hecke.hpp"
#include "driftkl/scan.hpp"

namespace {

void BM_KLPrecompute(benchmark::State& state, driftkl::Execution mode) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    driftkl::KLTable table(n);
    table.precompute(mode);
    benchmark::DoNotOptimize(table.computed_columns());
  }
}

void BM_Scan(benchmark::State& state, int jobs) {
  driftkl::ScanOptions options;
  options.n = static_cast<int>(state.range(0));
  options.jobs = jobs;
  // Warm the shared KL table so both variants time the same work.
  driftkl::shared_kl_table(options.n).precompute(driftkl::Execution::Serial);
  for (auto _ : state) {
    const auto report = driftkl::run_scan(options);
    benchmark::DoNotOptimize(report.pairs);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_KLPrecompute, serial, driftkl::Execution::Serial)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_KLPrecompute, parallel, driftkl::Execution::Parallel)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scan, serial, 1)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scan, parallel, 4)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
