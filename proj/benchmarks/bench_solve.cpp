// Micro-benchmarks for compilation, reduction and the three propagation modes.
#include <benchmark/benchmark.h>

#include "modo/problems.hpp"
#include "modo/recursion.hpp"
#include "modo/search.hpp"
#include "modo/vpo.hpp"

using namespace modo;

namespace {

Instance instance_for(int cls, int n) {
  switch (cls) {
    case 0: return generate(ProblemClass::kKnapsack, n, 3, 1);
    case 1: return generate(ProblemClass::kTsp, n, 3, 1);
    default: return generate(ProblemClass::kMccavp, n, 3, 1, GenerateParams{50, 0.5});
  }
}

void BM_Compile(benchmark::State& state) {
  const Instance inst = instance_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compile_instance(inst).network.num_arcs());
  }
}

void BM_Pipeline(benchmark::State& state) {
  const Instance inst = instance_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const Network base = compile_instance(inst).network;
  for (auto _ : state) {
    state.PauseTiming();
    Network net = base;
    state.ResumeTiming();
    apply_pipeline(net);
    benchmark::DoNotOptimize(net.num_arcs());
  }
}

// range(2): 0 top-down, 1 bottom-up, 2 coupled.
void BM_Solve(benchmark::State& state) {
  const Instance inst = instance_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  Network net = compile_instance(inst).network;
  apply_pipeline(net);
  std::size_t size = 0;
  for (auto _ : state) {
    switch (state.range(2)) {
      case 0: size = propagate_topdown(net).frontier.size(); break;
      case 1: size = propagate_bottomup(net).frontier.size(); break;
      default: size = solve_bidirectional(net).frontier.size(); break;
    }
    benchmark::DoNotOptimize(size);
  }
  state.counters["frontier"] = static_cast<double>(size);
}

}  // namespace

BENCHMARK(BM_Compile)->Args({0, 30})->Args({1, 9})->Args({2, 14})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pipeline)->Args({0, 30})->Args({1, 9})->Args({2, 14})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Solve)
    ->ArgsProduct({{0}, {30}, {0, 1, 2}})
    ->ArgsProduct({{1}, {9}, {0, 1, 2}})
    ->ArgsProduct({{2}, {14}, {0, 1, 2}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
