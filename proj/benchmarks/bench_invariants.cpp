#include <benchmark/benchmark.h>

#include "lorentzinv/invariants.hpp"
#include "lorentzinv/lorentz.hpp"

using namespace lorentzinv;

namespace {

GroupSpec cyclic_rotation(long k) { return GroupSpec::finite({Transform::rotation(2, 0, 1, Rational(1, k))}); }

Matrix<BoostScalar> embedded_boost(std::size_t n) {
  Matrix<BoostScalar> m = Matrix<BoostScalar>::identity(n);
  const Matrix<BoostScalar> h = boost_matrix(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m(n - 2 + i, n - 2 + j) = h(i, j);
  return m;
}

}

static void BM_HilbertBasisCyclic(benchmark::State& state) {
  const GroupSpec g = cyclic_rotation(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(g));
}
BENCHMARK(BM_HilbertBasisCyclic)->DenseRange(2, 8)->Unit(benchmark::kMillisecond);

static void BM_HilbertBasisBoostBlock(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const GroupSpec g = GroupSpec::boost_cyclic(Transform(embedded_boost(n)), n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(g));
}
BENCHMARK(BM_HilbertBasisBoostBlock)->DenseRange(2, 6);

static void BM_Reynolds(benchmark::State& state) {
  const FiniteGroup g = enumerate_finite(cyclic_rotation(6));
  const Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  const Poly p = (x + y).pow(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reynolds(p, g));
}
BENCHMARK(BM_Reynolds)->RangeMultiplier(2)->Range(2, 16);

static void BM_Molien(benchmark::State& state) {
  const FiniteGroup g = enumerate_finite(cyclic_rotation(12));
  for (auto _ : state) benchmark::DoNotOptimize(molien(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Molien)->RangeMultiplier(2)->Range(8, 64);

static void BM_InvarianceCheck(benchmark::State& state) {
  const GroupSpec g = GroupSpec::boost_cyclic(Transform(boost_matrix(2)), 1);
  const Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  const Poly p = (x * x - y * y).pow(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_invariant(p, g));
}
BENCHMARK(BM_InvarianceCheck)->DenseRange(1, 5);

BENCHMARK_MAIN();
