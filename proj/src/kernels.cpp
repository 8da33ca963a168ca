#include "wsnsim/kernels.hpp"

#include <cstdint>

namespace wsnsim::kernels {
namespace {

std::size_t nearest_head(const Point& p, std::span<const Point> heads) {
  std::size_t best = 0;
  double best_d2 = squared_distance(p, heads[0]);
  for (std::size_t k = 1; k < heads.size(); ++k) {
    const double d2 = squared_distance(p, heads[k]);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = k;
    }
  }
  return best;
}

// Below this many node-head pairs the fork/join costs more than it saves.
constexpr std::size_t kParallelGrain = 4096;

}  // namespace

void nearest_heads_serial(std::span<const Point> points, std::span<const Point> heads, std::span<std::size_t> out) {
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = nearest_head(points[i], heads);
}

void nearest_heads_parallel(std::span<const Point> points, std::span<const Point> heads,
                            std::span<std::size_t> out) {
  const auto n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(static) if (points.size() * heads.size() >= kParallelGrain)
  for (std::int64_t i = 0; i < n; ++i) out[i] = nearest_head(points[i], heads);
}

std::vector<double> population_costs_serial(const CostWeights& weights, const std::vector<Node>& nodes,
                                            std::span<const std::vector<NodeId>> head_sets) {
  std::vector<double> costs(head_sets.size());
  for (std::size_t i = 0; i < head_sets.size(); ++i) costs[i] = cost_of_heads(weights, nodes, head_sets[i]);
  return costs;
}

std::vector<double> population_costs_parallel(const CostWeights& weights, const std::vector<Node>& nodes,
                                              std::span<const std::vector<NodeId>> head_sets) {
  std::vector<double> costs(head_sets.size());
  const auto n = static_cast<std::int64_t>(head_sets.size());
  const std::size_t work = head_sets.size() * nodes.size() * (head_sets.empty() ? 0 : head_sets[0].size());
#pragma omp parallel for schedule(static) if (work >= kParallelGrain)
  for (std::int64_t i = 0; i < n; ++i) costs[i] = cost_of_heads(weights, nodes, head_sets[i]);
  return costs;
}

}  // namespace wsnsim::kernels
