#include <benchmark/benchmark.h>

#include "lorentzinv/lorentz.hpp"
#include "lorentzinv/polynomial.hpp"

using namespace lorentzinv;

static void BM_PolyMultiply(benchmark::State& state) {
  const Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1), z = Poly::variable(3, 2);
  const Poly p = (x + y + z + Poly::constant(3, BoostScalar(1))).pow(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(p * p);
}
BENCHMARK(BM_PolyMultiply)->DenseRange(2, 8, 2);

static void BM_BoostPower(benchmark::State& state) {
  const Matrix<BoostScalar> h = boost_matrix(2);
  for (auto _ : state) {
    Matrix<BoostScalar> acc = Matrix<BoostScalar>::identity(2);
    for (long i = 0; i < state.range(0); ++i) acc = acc * h;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_BoostPower)->RangeMultiplier(4)->Range(4, 256);

static void BM_ValidateAndComponent(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Matrix<BoostScalar> a = lambda_pt(n);
  for (auto _ : state) {
    const LorentzMatrix l = validate(a, n);
    benchmark::DoNotOptimize(component(l));
    benchmark::DoNotOptimize(transform_order(Transform(a)));
  }
}
BENCHMARK(BM_ValidateAndComponent)->DenseRange(2, 6);

static void BM_InvolutionNormalForm(benchmark::State& state) {
  const LorentzMatrix l = validate(kappa_x(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(involution_normal_form(l));
}
BENCHMARK(BM_InvolutionNormalForm);

BENCHMARK_MAIN();
