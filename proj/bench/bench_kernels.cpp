// Serial reference kernels against their OpenMP counterparts.
//
//   ./wsnsim_bench --benchmark_filter=Population
//   OMP_NUM_THREADS=4 ./wsnsim_bench

#include <benchmark/benchmark.h>

#include <vector>

#include "wsnsim/firefly.hpp"
#include "wsnsim/kernels.hpp"
#include "wsnsim/network.hpp"

using namespace wsnsim;

namespace {

std::vector<Node> field_of(std::size_t n) {
  FieldConfig config;
  config.node_count = n;
  return deploy(config, 1);
}

std::vector<std::vector<NodeId>> head_sets(std::size_t nodes, std::size_t population, std::size_t k) {
  Rng rng(2);
  std::vector<std::vector<NodeId>> sets(population);
  for (auto& set : sets) {
    std::vector<bool> used(nodes, false);
    while (set.size() < k) {
      const auto id = static_cast<std::size_t>(rng.below(nodes));
      if (used[id]) continue;
      used[id] = true;
      set.push_back(NodeId{id});
    }
  }
  return sets;
}

template <bool Parallel>
void NearestHeads(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto nodes = field_of(n);
  std::vector<Point> points, heads;
  for (const Node& node : nodes) points.push_back(node.position);
  for (std::size_t k = 0; k < n / 20 + 1; ++k) heads.push_back(points[k * 20 % n]);
  std::vector<std::size_t> out(n);
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::nearest_heads_parallel(points, heads, out);
    else
      kernels::nearest_heads_serial(points, heads, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * heads.size()));
}

template <bool Parallel>
void PopulationCosts(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto population = static_cast<std::size_t>(state.range(1));
  const auto nodes = field_of(n);
  const auto sets = head_sets(n, population, cluster_count(n, 0.05));
  const CostWeights weights;
  for (auto _ : state) {
    auto costs = Parallel ? kernels::population_costs_parallel(weights, nodes, sets)
                          : kernels::population_costs_serial(weights, nodes, sets);
    benchmark::DoNotOptimize(costs.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(population));
}

void OptimizeRound(benchmark::State& state) {
  const auto nodes = field_of(100);
  const FireflyParams params = FireflyParams::for_field(200.0);
  const auto exec = state.range(0) ? Execution::parallel : Execution::serial;
  for (auto _ : state) {
    Rng rng(3);
    auto result = optimize(nodes, 5, params, CostWeights{}, 200.0, rng, exec);
    benchmark::DoNotOptimize(result.best_cost);
  }
}

}  // namespace

BENCHMARK(NearestHeads<false>)->Name("NearestHeads/serial")->RangeMultiplier(10)->Range(100, 100000);
BENCHMARK(NearestHeads<true>)->Name("NearestHeads/omp")->RangeMultiplier(10)->Range(100, 100000);
BENCHMARK(PopulationCosts<false>)->Name("PopulationCosts/serial")->Args({100, 25})->Args({1000, 50})->Args({5000, 100});
BENCHMARK(PopulationCosts<true>)->Name("PopulationCosts/omp")->Args({100, 25})->Args({1000, 50})->Args({5000, 100});
BENCHMARK(OptimizeRound)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
