#ifndef WSNSIM_CLUSTERING_HPP
#define WSNSIM_CLUSTERING_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "wsnsim/network.hpp"

namespace wsnsim {

/// Cluster structure for one round. Dead nodes are left unassigned.
struct Clustering {
  static constexpr std::size_t unassigned = std::numeric_limits<std::size_t>::max();

  std::vector<NodeId> head_ids;
  /// Indexed by NodeId; position in head_ids or `unassigned`.
  std::vector<std::size_t> member_of;

  /// Members of cluster k, excluding the head itself.
  std::size_t member_count(std::size_t k) const;
};

struct CostWeights {
  double beta = 0.5;

  void validate() const;
};

/**
 * Assigns every alive node to its nearest head; heads map to themselves.
 * Ties go to the head listed first. Throws if `heads` is empty while alive
 * nodes exist, or if a head is dead or out of range.
 */
Clustering assign_members(const std::vector<Node>& nodes, std::span<const NodeId> heads);

/// Largest per-cluster mean node-to-head distance; the head counts as a
/// member at distance zero.
double f1(const Clustering& clustering, const std::vector<Node>& nodes);

/// Total initial energy of the network over current energy of the heads.
double f2(const std::vector<Node>& nodes, std::span<const NodeId> heads);

double cost(const CostWeights& weights, const Clustering& clustering, const std::vector<Node>& nodes);

/// assign_members followed by cost.
double cost_of_heads(const CostWeights& weights, const std::vector<Node>& nodes, std::span<const NodeId> heads);

}  // namespace wsnsim

#endif  // WSNSIM_CLUSTERING_HPP
