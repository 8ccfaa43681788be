#include <benchmark/benchmark.h>

#include "lorentzinv/regimes.hpp"

using namespace lorentzinv;

static void BM_TorusReconstruct(benchmark::State& state) {
  FourierSpec f;
  f.rank = 2;
  const int k = static_cast<int>(state.range(0));
  f.terms = {{{k, 0}, 1.0, 0.0}, {{1, k - 1}, 0.0, 0.5}, {{0, 1}, 0.25, 0.0}};
  for (auto _ : state) benchmark::DoNotOptimize(torus_reconstruct(f));
}
BENCHMARK(BM_TorusReconstruct)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_GapReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(schwarz_gap_report(0.7, static_cast<std::size_t>(state.range(0)), 1));
}
BENCHMARK(BM_GapReport)->RangeMultiplier(4)->Range(64, 4096);

static void BM_SeparateOrbits(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(separate_orbits({3.0, 1.0}, {5.0, -2.0}, 0.9));
}
BENCHMARK(BM_SeparateOrbits);

static void BM_CocompactTriviality(benchmark::State& state) {
  const Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  const Poly p = (x * x + y).pow(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cocompact_triviality(p, 2));
}
BENCHMARK(BM_CocompactTriviality)->DenseRange(1, 4);

BENCHMARK_MAIN();
