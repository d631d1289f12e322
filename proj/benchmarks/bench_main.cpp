#include <benchmark/benchmark.h>

#include "lorhom/catalog.hpp"
#include "lorhom/classifier.hpp"
#include "lorhom/lorentz.hpp"

using namespace lorhom;

static void BM_Killing(benchmark::State& state) {
  const auto s = minkowski(static_cast<std::size_t>(state.range(0)));
  // killing() is cached per algebra, so rebuild each iteration
  for (auto _ : state) benchmark::DoNotOptimize(so_algebra(s).killing());
}
BENCHMARK(BM_Killing)->DenseRange(2, 6, 2);

static void BM_Signature(benchmark::State& state) {
  const auto g = so_algebra(minkowski(static_cast<std::size_t>(state.range(0))));
  const Matrix b = g.killing();
  for (auto _ : state) benchmark::DoNotOptimize(signature(b));
}
BENCHMARK(BM_Signature)->DenseRange(2, 6, 2);

static void BM_ClassifyParabolic(benchmark::State& state) {
  const auto s = minkowski(static_cast<std::size_t>(state.range(0)));
  const auto h = parabolic(s);
  for (auto _ : state) benchmark::DoNotOptimize(classify(s, h));
}
BENCHMARK(BM_ClassifyParabolic)->DenseRange(2, 5);

static void BM_ClassifyTypeII(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = minkowski(n);
  const auto h = subalgebra_type2(s, 1, so_basis(n - 1));
  for (auto _ : state) benchmark::DoNotOptimize(classify(s, h));
}
BENCHMARK(BM_ClassifyTypeII)->DenseRange(2, 5);

static void BM_VerifyWolf(benchmark::State& state) {
  const auto c = wolf_case("su_p2", static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_case(c));
}
BENCHMARK(BM_VerifyWolf)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
