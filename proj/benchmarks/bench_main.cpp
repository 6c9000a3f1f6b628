#include <benchmark/benchmark.h>

#include "qtail/bracket.hpp"
#include "qtail/qfun.hpp"
#include "qtail/stabilization.hpp"
#include "qtail/tails.hpp"

using namespace qtail;

static void BM_SeriesMultiply(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const TruncatedSeries a = euler_function(n);
  const TruncatedSeries b = tail_torus_even(2, n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMultiply)->Arg(200)->Arg(1000)->Arg(4000);

static void BM_Euler(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(euler_function(state.range(0)));
}
BENCHMARK(BM_Euler)->Arg(2000)->Arg(10000);

static void BM_TailLkMultisum(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(tail_lk_multisum(state.range(0), 150, {jobs, false}));
}
BENCHMARK(BM_TailLkMultisum)->Args({2, 1})->Args({3, 1})->Args({3, 8});

static void BM_TailPhi(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tail_phi(state.range(0), state.range(0), 150));
}
BENCHMARK(BM_TailPhi)->Arg(1)->Arg(2);

static void BM_Stabilization(benchmark::State& state) {
  const TailSpec spec{TailFamily::LkProduct, 2, 1, 20};
  for (auto _ : state) benchmark::DoNotOptimize(normalized_skein_value(spec, state.range(0), state.range(0) + 1));
}
BENCHMARK(BM_Stabilization)->Arg(4)->Arg(8);

static void BM_Jones2Pretzel(benchmark::State& state) {
  const PDDiagram d = pretzel_pd({3, 2, 3, 2, 3});
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d, jobs));
}
BENCHMARK(BM_Jones2Pretzel)->Arg(1)->Arg(8);
BENCHMARK_MAIN();
