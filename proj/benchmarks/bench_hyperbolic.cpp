#include "semiarith/hyperbolic/karcher.hpp"
#include "semiarith/hyperbolic/trirectangle.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

using namespace semiarith::hyperbolic;

static void BM_KarcherMean(benchmark::State& state) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> ux(-2, 2), uy(0.2, 3);
  std::vector<HPoint> pts;
  for (int i = 0; i < state.range(0); ++i) pts.emplace_back(ux(rng), uy(rng));
  const MassDistribution m = MassDistribution::uniform(pts);
  for (auto _ : state) benchmark::DoNotOptimize(karcher_mean(m));
}
BENCHMARK(BM_KarcherMean)->Arg(2)->Arg(100)->Arg(1000);

static void BM_RealizeGroup(benchmark::State& state) {
  const Trirectangle tri = solve_trirectangle(std::asinh((2 + std::sqrt(3.0)) / 2), M_PI / 3);
  for (auto _ : state) benchmark::DoNotOptimize(realize_group(tri));
}
BENCHMARK(BM_RealizeGroup);
