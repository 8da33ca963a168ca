#include "wsnsim/clustering.hpp"

#include <algorithm>
#include <stdexcept>

#include "wsnsim/kernels.hpp"

namespace wsnsim {

std::size_t Clustering::member_count(std::size_t k) const {
  const auto in_cluster = static_cast<std::size_t>(std::count(member_of.begin(), member_of.end(), k));
  return in_cluster == 0 ? 0 : in_cluster - 1;
}

void CostWeights::validate() const {
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0, 1]");
}

Clustering assign_members(const std::vector<Node>& nodes, std::span<const NodeId> heads) {
  Clustering result;
  result.head_ids.assign(heads.begin(), heads.end());
  result.member_of.assign(nodes.size(), Clustering::unassigned);

  std::vector<Point> head_points;
  head_points.reserve(heads.size());
  for (const NodeId head : heads) {
    if (head.value >= nodes.size() || !nodes[head.value].alive)
      throw std::invalid_argument("cluster head must be an alive node");
    head_points.push_back(nodes[head.value].position);
  }

  std::vector<Point> points;
  std::vector<std::size_t> ids;
  for (const Node& n : nodes) {
    if (!n.alive) continue;
    points.push_back(n.position);
    ids.push_back(n.id.value);
  }
  if (heads.empty()) {
    if (!points.empty()) throw std::invalid_argument("no cluster heads for alive nodes");
    return result;
  }

  std::vector<std::size_t> nearest(points.size());
  kernels::nearest_heads_serial(points, head_points, nearest);
  for (std::size_t i = 0; i < ids.size(); ++i) result.member_of[ids[i]] = nearest[i];
  // Heads always belong to their own cluster, even when co-located with an
  // earlier head.
  for (std::size_t k = 0; k < heads.size(); ++k) result.member_of[heads[k].value] = k;
  return result;
}

double f1(const Clustering& clustering, const std::vector<Node>& nodes) {
  const std::size_t k_count = clustering.head_ids.size();
  std::vector<double> distance_sum(k_count, 0.0);
  std::vector<std::size_t> size(k_count, 0);
  for (std::size_t i = 0; i < clustering.member_of.size(); ++i) {
    const std::size_t k = clustering.member_of[i];
    if (k == Clustering::unassigned) continue;
    distance_sum[k] += euclidean(nodes[i].position, nodes[clustering.head_ids[k].value].position);
    ++size[k];
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < k_count; ++k)
    if (size[k] > 0) worst = std::max(worst, distance_sum[k] / static_cast<double>(size[k]));
  return worst;
}

double f2(const std::vector<Node>& nodes, std::span<const NodeId> heads) {
  double head_energy = 0.0;
  for (const NodeId head : heads) head_energy += nodes.at(head.value).energy;
  if (!(head_energy > 0.0)) throw std::domain_error("cluster heads hold no energy");
  return total_initial_energy(nodes) / head_energy;
}

double cost(const CostWeights& weights, const Clustering& clustering, const std::vector<Node>& nodes) {
  return weights.beta * f1(clustering, nodes) + (1.0 - weights.beta) * f2(nodes, clustering.head_ids);
}

double cost_of_heads(const CostWeights& weights, const std::vector<Node>& nodes, std::span<const NodeId> heads) {
  return cost(weights, assign_members(nodes, heads), nodes);
}

}  // namespace wsnsim
