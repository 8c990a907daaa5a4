#include <benchmark/benchmark.h>

#include "rkstab/rkstab.hpp"

using namespace rkstab;

static void BM_ExpandEnergy(benchmark::State& state) {
  const auto r = taylor_polynomial(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expand_energy(r));
}
BENCHMARK(BM_ExpandEnergy)->DenseRange(4, 16, 4);

static void BM_ExpandEnergyComposed(benchmark::State& state) {
  const auto r = compose_steps(preset("ssprk(5,4)").polynomial, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expand_energy(r));
}
BENCHMARK(BM_ExpandEnergyComposed)->Arg(1)->Arg(2)->Arg(3);

static void BM_NegativeDefiniteExact(benchmark::State& state) {
  const auto g = leading_data(expand_energy(taylor_polynomial(static_cast<int>(state.range(0))))).gamma_star;
  for (auto _ : state) benchmark::DoNotOptimize(is_negative_definite_exact(g));
}
BENCHMARK(BM_NegativeDefiniteExact)->Arg(3)->Arg(7)->Arg(11)->Arg(15);

static void BM_SymmetricEigenvalues(benchmark::State& state) {
  const auto g = leading_data(expand_energy(taylor_polynomial(static_cast<int>(state.range(0))))).gamma_star;
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_eigenvalues(g));
}
BENCHMARK(BM_SymmetricEigenvalues)->Arg(3)->Arg(7)->Arg(11);

static void BM_Classify(benchmark::State& state) {
  const auto e = expand_energy(preset("ssprk(10,4)").polynomial);
  for (auto _ : state) benchmark::DoNotOptimize(classify_strong_stability(e));
}
BENCHMARK(BM_Classify);

static void BM_HOperatorNorm(benchmark::State& state) {
  const auto sys = make_random_semi_negative(static_cast<int>(state.range(0)), 3, 0.5);
  const auto r = taylor_polynomial(4);
  for (auto _ : state) benchmark::DoNotOptimize(h_operator_norm(r, sys, 0.05));
}
BENCHMARK(BM_HOperatorNorm)->RangeMultiplier(2)->Range(4, 64);

static void BM_StabilitySweep(benchmark::State& state) {
  const auto sys = counterexample_rk4();
  const auto r = taylor_polynomial(4);
  for (auto _ : state) benchmark::DoNotOptimize(stability_sweep(r, sys, 1e-4, 1e-1, 60));
}
BENCHMARK(BM_StabilitySweep);
BENCHMARK_MAIN();
