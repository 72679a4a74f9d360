#include <benchmark/benchmark.h>

#include "esum/series_numeric.hpp"
#include "esum/zeta_numeric.hpp"

using namespace esum;

static void ZetaNumeric(benchmark::State& state) {
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(state.range(0));
  for (auto _ : state) {
    // fresh precision values defeat the cache only across precisions, so
    // evaluate a handful of arguments per iteration
    for (long s = 2; s <= 9; ++s) {
      BigFloat v = zeta_numeric(s, prec);
      benchmark::DoNotOptimize(v);
    }
  }
}
BENCHMARK(ZetaNumeric)->Arg(128)->Arg(192)->Arg(512);

static void EulerSumDirect(benchmark::State& state) {
  long N = state.range(0);
  for (auto _ : state) {
    DirectSum d = euler_sum_direct({2, 3, 5}, N, 192);
    benchmark::DoNotOptimize(d);
  }
  state.SetComplexityN(N);
}
BENCHMARK(EulerSumDirect)->Range(1000, 100000)->Complexity(benchmark::oN);

static void EvalZExpr(benchmark::State& state) {
  ZExpr e = hyper_reduce(5, 4, 5);
  for (auto _ : state) {
    BigFloat v = eval_zexpr(e, 192);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(EvalZExpr);

static void GenfuncCheckBench(benchmark::State& state) {
  Rational t = make_rational(1, 2);
  for (auto _ : state) {
    GenfuncCheck g = genfunc_check(2, 3, t, 400, 128);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(GenfuncCheckBench);
