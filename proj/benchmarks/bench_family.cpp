#include "semiarith/bounds/bounds.hpp"
#include "semiarith/family/gamma.hpp"
#include "semiarith/traces/invariants.hpp"

#include <benchmark/benchmark.h>

using namespace semiarith;

static void BM_BuildGamma(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(family::build_gamma(n));
}
BENCHMARK(BM_BuildGamma)->Arg(1)->Arg(8)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_SemiArithmeticCheck(benchmark::State& state) {
  const traces::TraceData t = family::family_traces(2);
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(traces::semi_arithmetic_check(t, depth));
}
BENCHMARK(BM_SemiArithmeticCheck)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_EllipticOrderBound(benchmark::State& state) {
  const double c = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bounds::elliptic_order_bound(c));
}
BENCHMARK(BM_EllipticOrderBound)->Arg(1)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);
