#include <benchmark/benchmark.h>

#include "esum/combinatorics.hpp"
#include "esum/euler_reduce.hpp"

using namespace esum;

static void HyperharmonicDef(benchmark::State& state) {
  long n = state.range(0);
  for (auto _ : state) {
    Rational v = hyperharmonic_def(n, 3, 4);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(HyperharmonicDef)->Arg(30)->Arg(100)->Arg(300);

static void HyperharmonicClosed(benchmark::State& state) {
  long n = state.range(0);
  for (auto _ : state) {
    Rational v = hyperharmonic_closed(n, 3, 4);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(HyperharmonicClosed)->Arg(30)->Arg(100)->Arg(300);

static void RStirlingRow(benchmark::State& state) {
  long q = state.range(0);
  for (auto _ : state) {
    for (long k = 0; k <= q; ++k) {
      Integer v = rstirling1(q, k, 21);
      benchmark::DoNotOptimize(v);
    }
  }
}
BENCHMARK(RStirlingRow)->Arg(6)->Arg(12);

static void HyperReduce(benchmark::State& state) {
  long order = state.range(0);
  for (auto _ : state) {
    ZExpr e = hyper_reduce(3, order, order + 5);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(HyperReduce)->Arg(1)->Arg(3)->Arg(5);

static void ReflectionHyper(benchmark::State& state) {
  for (auto _ : state) {
    ZExpr e = reflection_hyper(6, 4, 6);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(ReflectionHyper);
