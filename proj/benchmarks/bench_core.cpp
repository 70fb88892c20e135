#include <benchmark/benchmark.h>

#include "gpc/allen_cahn.hpp"
#include "gpc/ehrhard.hpp"
#include "gpc/gaussian.hpp"
#include "gpc/random.hpp"
#include "gpc/relaxed.hpp"

using namespace gpc;

static void BM_Quantile(benchmark::State& state) {
  double p = 1e-6, acc = 0.0;
  for (auto _ : state) {
    acc += std_normal_quantile(p);
    p = p < 0.9 ? p * 1.1 : 1e-6;
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_Quantile);

static void BM_TotalVariation(benchmark::State& state) {
  const auto g = build_grid(static_cast<int>(state.range(0)), 6, static_cast<int>(state.range(1)));
  Xoshiro256 rng(1);
  const auto u = random_smooth_field(rng, g);
  for (auto _ : state) benchmark::DoNotOptimize(total_variation_gamma(u));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g->size()));
}
BENCHMARK(BM_TotalVariation)->Args({1, 2048})->Args({2, 256})->Args({3, 64});

static void BM_PerimeterGamma(benchmark::State& state) {
  const auto g = build_grid(2, 6, static_cast<int>(state.range(0)));
  Xoshiro256 rng(2);
  const auto E = random_smooth_set(rng, g);
  for (auto _ : state) benchmark::DoNotOptimize(perimeter_gamma(E));
}
BENCHMARK(BM_PerimeterGamma)->Arg(128)->Arg(256);

static void BM_AllenCahnGradient(benchmark::State& state) {
  const auto g = build_grid(static_cast<int>(state.range(0)), 6, static_cast<int>(state.range(1)));
  const DoubleWell W = DoubleWell::quartic();
  Xoshiro256 rng(3);
  const auto u = random_smooth_field(rng, g);
  for (auto _ : state) benchmark::DoNotOptimize(allen_cahn_gradient(u, 0.1, W));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g->size()));
}
BENCHMARK(BM_AllenCahnGradient)->Args({1, 2048})->Args({2, 256});

static void BM_EhrhardSymmetrizeSet(benchmark::State& state) {
  const auto g = build_grid(2, 6, 256);
  Xoshiro256 rng(4);
  const auto E = random_smooth_set(rng, g);
  for (auto _ : state) benchmark::DoNotOptimize(ehrhard_symmetrize_set(E, 1));
}
BENCHMARK(BM_EhrhardSymmetrizeSet);

static void BM_RelaxedEnergy(benchmark::State& state) {
  const auto g = build_grid(2, 6, 256);
  Xoshiro256 rng(5);
  const auto u = random_smooth_field(rng, g);
  for (auto _ : state) benchmark::DoNotOptimize(relaxed_energy(u));
}
BENCHMARK(BM_RelaxedEnergy);
BENCHMARK_MAIN();
