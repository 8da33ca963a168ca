#ifndef WSNSIM_SRC_SWARM_HPP
#define WSNSIM_SRC_SWARM_HPP

#include <span>
#include <vector>

#include "wsnsim/firefly.hpp"
#include "wsnsim/jumper.hpp"

namespace wsnsim::detail {

/// Positions of K distinct nodes drawn uniformly from `eligible`.
std::vector<Point> random_situation(const std::vector<Node>& nodes, std::span<const NodeId> eligible,
                                    std::size_t k, Rng& rng);

/// Firefly loop; a non-null `jumper` adds the status table and jump step.
SearchResult run_swarm(const std::vector<Node>& nodes, std::size_t k, const FireflyParams& params,
                       const JumperParams* jumper, const CostWeights& weights, double side, Rng& rng,
                       Execution exec);

}  // namespace wsnsim::detail

#endif  // WSNSIM_SRC_SWARM_HPP
