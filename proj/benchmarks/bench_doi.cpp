#include <benchmark/benchmark.h>

#include "opdiff/doi/doi.hpp"
#include "opdiff/lab/ensemble.hpp"
#include "opdiff/lab/function_spec.hpp"

namespace {

using namespace opdiff;

void BM_doi_apply(benchmark::State& state) {
  const auto pair = lab::ensemble(7, state.range(0), 2);
  const auto f = lab::rational_test_functions()[3];
  const auto symbol = doi::SchurSymbol::divided_difference(f, doi::DiagonalRule::derivative);
  pair.h0().eigenvalues();
  pair.h1().eigenvalues();
  for (auto _ : state) benchmark::DoNotOptimize(doi::doi_apply(pair, symbol).matrix.data());
}

BENCHMARK(BM_doi_apply)->RangeMultiplier(2)->Range(8, 256);

void BM_birman_solomyak(benchmark::State& state) {
  const auto pair = lab::ensemble(7, state.range(0), 2);
  const auto f = lab::rational_test_functions()[0];
  for (auto _ : state)
    benchmark::DoNotOptimize(doi::birman_solomyak_residual(pair, f, doi::DiagonalRule::derivative).residual);
}

BENCHMARK(BM_birman_solomyak)->Arg(16)->Arg(64);

}  // namespace
