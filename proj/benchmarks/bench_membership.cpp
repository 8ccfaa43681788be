#include <benchmark/benchmark.h>

#include "lorentzinv/membership.hpp"

using namespace lorentzinv;

static void BM_MembershipC4(benchmark::State& state) {
  const Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  const Poly x2y2 = x * x * y * y;
  const std::vector<Poly> gens{x * x + y * y, x2y2, x.pow(3) * y - x * y.pow(3)};
  const int d = static_cast<int>(state.range(0));
  const Poly p = (x * x + y * y).pow(d) + x2y2.pow(d / 2);
  for (auto _ : state) benchmark::DoNotOptimize(membership(p, gens));
}
BENCHMARK(BM_MembershipC4)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_SubalgebraDimension(benchmark::State& state) {
  const Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1), z = Poly::variable(3, 2);
  const std::vector<Poly> gens{x * x + y * y, z * z, x * y * z};
  for (auto _ : state) benchmark::DoNotOptimize(subalgebra_dimension(gens, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SubalgebraDimension)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
