#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hinge/calculus.hpp"
#include "hinge/model.hpp"
#include "hinge/stationary.hpp"

namespace {

using namespace hinge;

SampleSet make_set(std::size_t n, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> component(-10.0, 10.0);
  std::vector<Sample> samples;
  samples.reserve(n);
  while (samples.size() < n) {
    const Vec3 w1 = {component(rng), component(rng), component(rng)};
    const Vec3 w2 = {component(rng), component(rng), component(rng)};
    if (s_of(w1) > 1e-3 && s_of(w2) > 1e-3) {
      samples.emplace_back(w1, w2);
    }
  }
  return SampleSet(std::move(samples));
}

void BM_objective(benchmark::State& state) {
  const SampleSet set = make_set(static_cast<std::size_t>(state.range(0)));
  const Angles at{0.3, -0.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(objective(set, at));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_objective)->Arg(1)->Arg(16)->Arg(256);

void BM_gradient(benchmark::State& state) {
  const SampleSet set = make_set(static_cast<std::size_t>(state.range(0)));
  const Angles at{0.3, -0.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gradient_multi(set, at));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_gradient)->Arg(1)->Arg(16)->Arg(256);

void BM_hessian(benchmark::State& state) {
  const SampleSet set = make_set(1);
  const Angles at{0.3, -0.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hessian(set[0], at));
  }
}
BENCHMARK(BM_hessian);

void BM_raw_hessian_det(benchmark::State& state) {
  const SampleSet set = make_set(1);
  const Angles at{0.3, -0.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(raw_hessian_det(set[0], at));
  }
}
BENCHMARK(BM_raw_hessian_det);

void BM_fd_hessian(benchmark::State& state) {
  const SampleSet set = make_set(4);
  const Angles at{0.3, -0.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(fd_hessian(set, at));
  }
}
BENCHMARK(BM_fd_hessian);

void BM_trace_curve(benchmark::State& state) {
  // the reference sample's curve
  const Sample a({3.4641016151377544, 1.4142135623730951, 2.0},
                 {1.4142135623730951, 0.0, 3.7416573867739413});
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_curve(a, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_trace_curve)->Arg(64)->Arg(1024);

}  // namespace
