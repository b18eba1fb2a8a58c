#include <benchmark/benchmark.h>

#include <sstream>

#include "burau4/braid.hpp"
#include "burau4/regularity.hpp"

using namespace burau4;

namespace {

void BM_CheckInstance(benchmark::State& state) {
  const auto sigma = braid::parse_bv("a^3 b^3 abAB b^-3 a^-3");
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto out = regularity::check_instance(sigma, k, k);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_CheckInstance)->Arg(4)->Arg(10)->Arg(18);

void BM_ScanGrid(benchmark::State& state) {
  const auto sigma = braid::parse_bv("a^3 b^3 abAB b^-3 a^-3");
  const int top = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto res = regularity::scan_thresholds(sigma, 1, top, 1, top);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_ScanGrid)->Arg(6)->Arg(12);

void BM_BatchTrials(benchmark::State& state) {
  regularity::BatchConfig cfg;
  cfg.count = static_cast<uint64_t>(state.range(0));
  cfg.seed = 424242;
  for (auto _ : state) {
    auto report = regularity::random_batch(cfg, nullptr);
    benchmark::DoNotOptimize(report);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BatchTrials)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
