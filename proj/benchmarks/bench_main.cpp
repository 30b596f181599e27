#include <benchmark/benchmark.h>

#include "toggledyn/census.hpp"
#include "toggledyn/fence.hpp"
#include "toggledyn/operators.hpp"

using namespace toggledyn;

static void BM_CensusPromotionPath(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = Graph::path(n);
  auto w = promotion_word(n);
  for (auto _ : state) benchmark::DoNotOptimize(full_census(g, w).sizes.orbit_count());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(factorial(n)));
}
BENCHMARK(BM_CensusPromotionPath)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_CensusThreads(benchmark::State& state) {
  Graph g = Graph::path(8);
  auto w = toric_word(8);
  CensusOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(full_census(g, w, opts).sizes.orbit_count());
}
BENCHMARK(BM_CensusThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_TimelinePeriod(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Labeling seed = Labeling::unrank(n, factorial(n) / 3);
  for (auto _ : state) {
    Timeline tl(seed, n / 2);
    benchmark::DoNotOptimize(tl.period());
  }
}
BENCHMARK(BM_TimelinePeriod)->Arg(6)->Arg(8)->Arg(10);

static void BM_FenceAndOmega(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Labeling seed = Labeling::unrank(n, factorial(n) / 3);
  for (auto _ : state) benchmark::DoNotOptimize(omega(seed, n / 2).orbit_size);
}
BENCHMARK(BM_FenceAndOmega)->Arg(6)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
