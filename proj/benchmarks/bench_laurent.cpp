#include <benchmark/benchmark.h>

#include "burau4/laurent.hpp"

using burau4::laurent::LaurentPoly;

namespace {

// Dense alternating-coefficient polynomial spanning [-span, span].
LaurentPoly dense_poly(int span) {
  std::vector<LaurentPoly::Term> terms;
  for (int e = -span; e <= span; ++e)
    terms.emplace_back(e, (e % 2 == 0) ? 1 + (e & 3) : -(1 + (e & 3)));
  return LaurentPoly::from_terms(std::move(terms));
}

void BM_PolyMulDense(benchmark::State& state) {
  const LaurentPoly p = dense_poly(static_cast<int>(state.range(0)));
  const LaurentPoly q = dense_poly(static_cast<int>(state.range(0)) / 2 + 1);
  for (auto _ : state) {
    LaurentPoly r = p * q;
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_PolyMulDense)->Arg(8)->Arg(32)->Arg(128)->Arg(512);

void BM_PolyAddDense(benchmark::State& state) {
  const LaurentPoly p = dense_poly(static_cast<int>(state.range(0)));
  const LaurentPoly q = dense_poly(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    LaurentPoly r = p + q;
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_PolyAddDense)->Arg(32)->Arg(512);

void BM_PolyExactDiv(benchmark::State& state) {
  const LaurentPoly d =
      LaurentPoly::parse("t^-2-1");
  const LaurentPoly p = dense_poly(static_cast<int>(state.range(0))) * d;
  for (auto _ : state) {
    auto q = burau4::laurent::exact_div(p, d);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_PolyExactDiv)->Arg(32)->Arg(512);

void BM_PolyToText(benchmark::State& state) {
  const LaurentPoly p = dense_poly(256);
  for (auto _ : state) {
    std::string s = p.to_text();
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_PolyToText);

}  // namespace
