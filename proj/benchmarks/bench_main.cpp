#include <benchmark/benchmark.h>

#include "graphonlab/graphonlab.hpp"

namespace {

using namespace graphonlab;

StepGraphon exact_three_part() {
  auto r = [](long a, long b) { return Scalar::rational(a, b); };
  return validate_graphon({r(1, 6), r(1, 3), r(1, 2)},
                          {{r(1, 2), r(1, 3), r(0, 1)}, {r(1, 3), r(1, 1), r(3, 4)}, {r(0, 1), r(3, 4), r(1, 5)}});
}

StepGraphon floating_three_part() {
  return validate_graphon({Scalar(0.2), Scalar(0.3), Scalar(0.5)},
                          {{Scalar(0.1), Scalar(0.7), Scalar(0.3)},
                           {Scalar(0.7), Scalar(0.9), Scalar(0.25)},
                           {Scalar(0.3), Scalar(0.25), Scalar(0.6)}});
}

void BM_DensityExact(benchmark::State& state) {
  const auto w = exact_three_part();
  const auto k = complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(t_exact(k, w, {.threads = 1}));
}
BENCHMARK(BM_DensityExact)->DenseRange(3, 7);

void BM_DensityFloating(benchmark::State& state) {
  const auto w = floating_three_part();
  const auto k = complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(t_exact(k, w, {.threads = 1}));
}
BENCHMARK(BM_DensityFloating)->DenseRange(3, 9);

void BM_EdgePmfExact(benchmark::State& state) {
  const auto w = exact_three_part();
  const auto k = complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(edge_count_pmf_exact(k, w, {.threads = 1}));
}
BENCHMARK(BM_EdgePmfExact)->DenseRange(3, 6);

void BM_EdgePmfFloating(benchmark::State& state) {
  const auto w = floating_three_part();
  const auto k = complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(edge_count_pmf_exact(k, w, {.threads = 1}));
}
BENCHMARK(BM_EdgePmfFloating)->DenseRange(3, 8);

void BM_MonteCarloC4(benchmark::State& state) {
  const auto w = floating_three_part();
  const auto c4 = cycle(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(t_monte_carlo(c4, w, static_cast<std::uint64_t>(state.range(0)), 1, {.threads = 1}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloC4)->Arg(1 << 16);

void BM_EmpiricalPmfK4(benchmark::State& state) {
  const auto w = exact_three_part();
  const auto k4 = complete(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(empirical_edge_pmf(k4, w, static_cast<std::uint64_t>(state.range(0)), 1, {.threads = 1}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EmpiricalPmfK4)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();
