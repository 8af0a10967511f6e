#include <benchmark/benchmark.h>

#include "opdiff/smoothness/kato.hpp"

namespace {

using namespace opdiff;
using smoothness::MultOpModel;

void BM_kato_norm_interval(benchmark::State& state) {
  const auto m = MultOpModel::random(-4, 4, static_cast<std::size_t>(state.range(0)), 2, 2, 11);
  for (auto _ : state) benchmark::DoNotOptimize(smoothness::kato_norm_interval(m).value);
  state.SetComplexityN(state.range(0));
}

BENCHMARK(BM_kato_norm_interval)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_kato_norm_resolvent(benchmark::State& state) {
  const auto m = MultOpModel::plateau(-8, 8, static_cast<std::size_t>(state.range(0)), 2, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(smoothness::kato_norm_resolvent(m).c1);
}

BENCHMARK(BM_kato_norm_resolvent)->Arg(96)->Arg(192)->Unit(benchmark::kMillisecond);

}  // namespace
