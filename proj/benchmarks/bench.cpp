#include <benchmark/benchmark.h>

#include "trisat/finite_oracle.hpp"
#include "trisat/ladder.hpp"
#include "trisat/root_system.hpp"
#include "trisat/table_generation.hpp"
#include "trisat/torus_delta.hpp"
#include "trisat/weil.hpp"

using namespace trisat;

static void BM_RootSystemUncached(benchmark::State& state) {
  const DynkinType t(Family::E, 8);
  for (auto _ : state) benchmark::DoNotOptimize(build(t));
}
BENCHMARK(BM_RootSystemUncached);

static void BM_H1Sweep(benchmark::State& state) {
  const DynkinType t(Family::D, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    int zeros = 0;
    for (int c = 7; c <= 200; ++c) zeros += principal_h1(t, HyperbolicTriple::make(2, 3, c)) == 0;
    benchmark::DoNotOptimize(zeros);
  }
}
BENCHMARK(BM_H1Sweep)->Arg(8)->Arg(50);

static void BM_Delta(benchmark::State& state) {
  const DynkinType t(Family::F, 4);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(delta(t, m));
}
BENCHMARK(BM_Delta)->Arg(5)->Arg(11);

static void BM_Saturation(benchmark::State& state) {
  const auto t = HyperbolicTriple::make(2, 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(saturation(DynkinType(Family::D, 43), t));
}
BENCHMARK(BM_Saturation);

static void BM_GenerateTable(benchmark::State& state) {
  const int which = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_table(which));
}
BENCHMARK(BM_GenerateTable)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_EpiCount(benchmark::State& state) {
  const auto t = HyperbolicTriple::make(2, 3, 7);
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(epi_count(t, q));
}
BENCHMARK(BM_EpiCount)->Arg(13)->Arg(29)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
