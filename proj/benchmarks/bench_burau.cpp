#include <benchmark/benchmark.h>

#include "burau4/braid.hpp"
#include "burau4/burau.hpp"

using namespace burau4;

namespace {

void BM_EvaluateRandomBVWord(benchmark::State& state) {
  const auto w = braid::random_reduced_bv_word(
      static_cast<size_t>(state.range(0)), 12345);
  for (auto _ : state) {
    auto m = burau::evaluate(w);
    benchmark::DoNotOptimize(m);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvaluateRandomBVWord)->Arg(4)->Arg(12)->Arg(32)->Arg(64);

void BM_EvaluateExpanded(benchmark::State& state) {
  const auto w = braid::bv_expand(braid::random_reduced_bv_word(
      static_cast<size_t>(state.range(0)), 12345));
  for (auto _ : state) {
    auto m = burau::evaluate(w);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_EvaluateExpanded)->Arg(4)->Arg(12)->Arg(32);

void BM_ArtinTrivial(benchmark::State& state) {
  // Commutator word: nontrivial but with heavy cancellation pressure.
  const auto w1 = braid::bv_expand(braid::random_reduced_bv_word(
      static_cast<size_t>(state.range(0)), 99));
  const auto w = braid::free_reduce(
      braid::concat(w1, braid::inverse(w1)));
  for (auto _ : state) {
    bool t = burau::artin_trivial(w);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_ArtinTrivial)->Arg(4)->Arg(8);

}  // namespace
