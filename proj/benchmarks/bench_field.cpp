#include "semiarith/field/min_poly.hpp"
#include "semiarith/field/quad_field.hpp"
#include "semiarith/field/roots.hpp"
#include "semiarith/field/tower.hpp"

#include <benchmark/benchmark.h>

using namespace semiarith::field;

static void BM_QuadPow(benchmark::State& state) {
  const QuadElem eps(QuadField(3), 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(pow(eps, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_QuadPow)->Arg(8)->Arg(30)->Arg(120);

static void BM_FundamentalUnit(benchmark::State& state) {
  const QuadField k(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_unit(k));
}
BENCHMARK(BM_FundamentalUnit)->Arg(7)->Arg(94)->Arg(991);

static void BM_TowerMinPoly(benchmark::State& state) {
  const QuadField k(3);
  const QuadElem e = pow(QuadElem(k, 2, 1), static_cast<int>(state.range(0)));
  const TowerElem x(inverse(e), QuadElem(k, 1), QuadElem(k, 1) + inverse(e * e));
  for (auto _ : state) benchmark::DoNotOptimize(min_poly_tower(x * x));
}
BENCHMARK(BM_TowerMinPoly)->Arg(1)->Arg(8)->Arg(30);

static void BM_MahlerMeasure(benchmark::State& state) {
  const IntPolynomial lehmer = IntPolynomial::from_descending({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(mahler_measure(lehmer));
}
BENCHMARK(BM_MahlerMeasure);

static void BM_House(benchmark::State& state) {
  const IntPolynomial p = IntPolynomial::from_descending({1, -60, 134, -60, 1});
  for (auto _ : state) benchmark::DoNotOptimize(house(p));
}
BENCHMARK(BM_House);
