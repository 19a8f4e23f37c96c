#include <benchmark/benchmark.h>

#include "scaling/generators.hpp"
#include "scaling/riemann_roch.hpp"
#include "scaling/verify.hpp"

using namespace scaling;

static void PolyTimes(benchmark::State& state) {
  gen::Rng rng(42);
  auto size = static_cast<unsigned>(state.range(0));
  SlopeGroup group = gen::slopeGroup(rng);
  NewtonPolygon a = gen::polygon(rng, group, size);
  NewtonPolygon b = gen::polygon(rng, group, size);
  for (auto _ : state) benchmark::DoNotOptimize(polyTimes(a, b));
}
BENCHMARK(PolyTimes)->Arg(4)->Arg(16)->Arg(64);

static void Legendre(benchmark::State& state) {
  gen::Rng rng(7);
  SlopeGroup group = gen::slopeGroup(rng);
  NewtonPolygon a = gen::polygon(rng, group, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fromFunction(legendre(a)));
}
BENCHMARK(Legendre)->Arg(8)->Arg(64);

static void DimFiltrationPTwo(benchmark::State& state) {
  Divisor d(2);
  d.add(1, HpScalar(2, Integer(1)));
  auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dimFiltration(d, n));
}
BENCHMARK(DimFiltrationPTwo)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void DimFiltrationPThree(benchmark::State& state) {
  Divisor d(3);
  d.add(Rational(5, 2), HpScalar::fromRational(3, Rational(2, 9)));
  d.add(Rational(3, 2), HpScalar::fromRational(3, Rational(-2, 9)));
  auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dimFiltration(d, n));
}
BENCHMARK(DimFiltrationPThree)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void VerifyAlgebra(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify::run({.seed = 1, .count = 1000, .filter = "germ/"}));
}
BENCHMARK(VerifyAlgebra)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
