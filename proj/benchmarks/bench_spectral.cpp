#include <benchmark/benchmark.h>

#include "opdiff/random.hpp"
#include "opdiff/spectral/hermitian.hpp"
#include "opdiff/spectral/schatten.hpp"

namespace {

using namespace opdiff;

void BM_eig_decompose(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  Philox4x64 rng(1, 0);
  const Matrix h = random_hermitian(rng, n);
  for (auto _ : state) {
    spectral::HermitianOperator op(h);
    benchmark::DoNotOptimize(op.eigenvalues().data());
  }
  state.SetComplexityN(state.range(0));
}

BENCHMARK(BM_eig_decompose)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNCubed);

void BM_schatten_norm(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  Philox4x64 rng(2, 0);
  const Matrix m = random_complex_gaussian(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(spectral::schatten_norm(m, 1.0));
}

BENCHMARK(BM_schatten_norm)->RangeMultiplier(4)->Range(16, 256);

}  // namespace
