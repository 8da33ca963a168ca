#ifndef WSNSIM_LEACH_HPP
#define WSNSIM_LEACH_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "wsnsim/clustering.hpp"
#include "wsnsim/network.hpp"
#include "wsnsim/rng.hpp"

namespace wsnsim {

/// Distributed LEACH election state.
struct LeachState {
  double p = 0.05;
  std::size_t round = 0;
  /// G: nodes that have not been head in the current epoch, indexed by NodeId.
  std::vector<bool> not_yet_head;

  explicit LeachState(double probability = 0.05);
};

/// round(1/p) rounds per epoch.
std::size_t epoch_length(double p);

/// Election threshold for a node at round r; 0 outside G. Exactly 1 on the
/// last round of an epoch when 1/p is integral.
double leach_threshold(double p, std::size_t round, bool in_group);

/**
 * One election round. Refills G with the alive nodes at each epoch start,
 * drops dead nodes from G, then every alive node draws U[0,1) (in id order)
 * and becomes head when the draw is below its threshold. An empty result
 * means every node sends straight to the base station this round.
 */
std::vector<NodeId> elect(LeachState& state, const std::vector<Node>& nodes, Rng& rng);

/// Members join the head reachable with the least energy, i.e. the nearest.
Clustering join_nearest(const std::vector<Node>& nodes, std::span<const NodeId> heads);

}  // namespace wsnsim

#endif  // WSNSIM_LEACH_HPP
