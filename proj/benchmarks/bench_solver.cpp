#include <benchmark/benchmark.h>

#include "hinge/ambiguity.hpp"
#include "hinge/curves.hpp"
#include "hinge/datagen.hpp"
#include "hinge/solver.hpp"

namespace {

using namespace hinge;

void BM_solve(benchmark::State& state) {
  const SamplePair pair = paper_example();
  const SampleSet set({pair.a, pair.b});
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(set, {2.0, 1.8}));
  }
}
BENCHMARK(BM_solve);

void BM_multistart(benchmark::State& state) {
  const SamplePair pair = paper_example();
  const SampleSet set({pair.a, pair.b});
  MultistartOptions opts;
  opts.grid_density = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(multistart(set, opts));
  }
}
BENCHMARK(BM_multistart)->Arg(8)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_pattern_census(benchmark::State& state) {
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        enumerate_patterns({step, 4.0, step}, {-4.0, 4.0, step}));
  }
  state.SetLabel("step 1/" + std::to_string(state.range(0)));
}
BENCHMARK(BM_pattern_census)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_datagen(benchmark::State& state) {
  DatagenConfig config;
  config.truth = {0.4, -0.9};
  config.count = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate(config));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_datagen)->Arg(100);

void BM_false_minima_report(benchmark::State& state) {
  const SamplePair pair = paper_example();
  for (auto _ : state) {
    benchmark::DoNotOptimize(false_minima_report(pair));
  }
}
BENCHMARK(BM_false_minima_report);

}  // namespace
