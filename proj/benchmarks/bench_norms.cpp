#include <benchmark/benchmark.h>

#include "hllab/boundary.hpp"
#include "hllab/family.hpp"
#include "hllab/radial.hpp"
#include "hllab/seq.hpp"

using namespace hllab;

namespace {

void BM_EvaluateCircle(benchmark::State& state) {
  const std::size_t deg = state.range(0);
  const CoefficientSeries f = random_polynomial(deg, 1);
  const std::size_t M = auto_samples(deg);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_circle(f, 0.9, M));
  state.SetComplexityN(int64_t(M));
}
BENCHMARK(BM_EvaluateCircle)->Arg(64)->Arg(512)->Arg(4096)->Complexity();

void BM_CauchyPower(benchmark::State& state) {
  const std::size_t N = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_power(1.5, N));
}
BENCHMARK(BM_CauchyPower)->Arg(512)->Arg(4096)->Arg(1 << 15);

void BM_HardyLorentzNorm(benchmark::State& state) {
  const std::size_t deg = state.range(0);
  const CoefficientSeries f = random_polynomial(deg, 2);
  const std::size_t M = auto_samples(deg);
  for (auto _ : state) benchmark::DoNotOptimize(hardy_lorentz_norm(f, 0.5, 1.0, M));
}
BENCHMARK(BM_HardyLorentzNorm)->Arg(64)->Arg(512)->Arg(4096);

void BM_BergmanNorm(benchmark::State& state) {
  const std::size_t deg = state.range(0);
  const CoefficientSeries f = random_polynomial(deg, 3);
  const RadialGrid grid = graded_radial_grid(state.range(1), 3.0);
  const std::size_t M = auto_samples(deg);
  for (auto _ : state)
    benchmark::DoNotOptimize(bergman_quasinorm(f, MixedNormSpec{2.0, 2.0, 1.0}, grid, M));
}
BENCHMARK(BM_BergmanNorm)->Args({64, 128})->Args({256, 512})->Args({512, 512});

void BM_BlockedNorm(benchmark::State& state) {
  BlockedSeq x;
  RandomStream rng(4);
  x.entries.resize(state.range(0));
  for (cplx& v : x.entries) v = rng.next_cplx();
  for (auto _ : state)
    benchmark::DoNotOptimize(blocked_norm(x, 2.0, 1.0, PowerWeight{0.5}));
}
BENCHMARK(BM_BlockedNorm)->Arg(1024)->Arg(1 << 15);

void BM_MeanOscillation(benchmark::State& state) {
  const std::size_t deg = state.range(0);
  const CircleSamples s = evaluate_circle(lacunary_series(deg), 1.0, auto_samples(deg));
  for (auto _ : state) benchmark::DoNotOptimize(bmoa_seminorm(s));
}
BENCHMARK(BM_MeanOscillation)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
