#ifndef WSNSIM_KERNELS_HPP
#define WSNSIM_KERNELS_HPP

// Data-parallel hot loops. Every kernel has a serial reference and an OpenMP
// version; both write each output slot from the same per-item computation, so
// their results are bitwise identical regardless of thread count.

#include <cstddef>
#include <span>
#include <vector>

#include "wsnsim/clustering.hpp"
#include "wsnsim/geometry.hpp"
#include "wsnsim/network.hpp"

namespace wsnsim {

enum class Execution { serial, parallel };

namespace kernels {

/// out[i] = index of the head nearest to points[i], lowest index on ties.
void nearest_heads_serial(std::span<const Point> points, std::span<const Point> heads,
                          std::span<std::size_t> out);
void nearest_heads_parallel(std::span<const Point> points, std::span<const Point> heads,
                            std::span<std::size_t> out);

/// Clustering cost of each candidate head set.
std::vector<double> population_costs_serial(const CostWeights& weights, const std::vector<Node>& nodes,
                                            std::span<const std::vector<NodeId>> head_sets);
std::vector<double> population_costs_parallel(const CostWeights& weights, const std::vector<Node>& nodes,
                                              std::span<const std::vector<NodeId>> head_sets);

inline std::vector<double> population_costs(Execution exec, const CostWeights& weights,
                                            const std::vector<Node>& nodes,
                                            std::span<const std::vector<NodeId>> head_sets) {
  return exec == Execution::parallel ? population_costs_parallel(weights, nodes, head_sets)
                                     : population_costs_serial(weights, nodes, head_sets);
}

}  // namespace kernels
}  // namespace wsnsim

#endif  // WSNSIM_KERNELS_HPP
