#include <benchmark/benchmark.h>

#include "opdiff/funcspace/dyadic.hpp"
#include "opdiff/funcspace/falpha.hpp"

namespace {

using namespace opdiff;
using funcspace::UniformGrid;

void BM_besov_norm(benchmark::State& state) {
  const UniformGrid grid(-2.0, 2.0, static_cast<std::size_t>(state.range(0)));
  const auto f = funcspace::f_alpha_sample(funcspace::FAlphaSpec::make(1.0, 1.0, 0.0), grid);
  const auto window = funcspace::dyadic_window_build(0, funcspace::nyquist_band_limit(grid));
  for (auto _ : state) benchmark::DoNotOptimize(funcspace::besov_norm(f, 1.0, window).norm);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_besov_norm)->RangeMultiplier(4)->Range(1 << 12, 1 << 18)->Unit(benchmark::kMillisecond);

void BM_f_alpha_fourier(benchmark::State& state) {
  const auto spec = funcspace::FAlphaSpec::make(1.0, 1.0, 0.0);
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(funcspace::f_alpha_fourier(spec, t).value);
}

BENCHMARK(BM_f_alpha_fourier)->Arg(100)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
