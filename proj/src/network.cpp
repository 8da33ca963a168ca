#include "wsnsim/network.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wsnsim/rng.hpp"

namespace wsnsim {

void FieldConfig::validate() const {
  if (!(side_length > 0.0)) throw std::invalid_argument("side_length must be positive");
  if (node_count == 0) throw std::invalid_argument("node_count must be at least 1");
  if (!(cluster_fraction > 0.0 && cluster_fraction <= 1.0))
    throw std::invalid_argument("cluster_fraction must lie in (0, 1]");
  if (!(initial_energy > 0.0)) throw std::invalid_argument("initial_energy must be positive");
  if (!std::isfinite(base_station.x) || !std::isfinite(base_station.y))
    throw std::invalid_argument("base_station must be finite");
}

std::vector<Node> deploy(const FieldConfig& config, std::uint64_t seed) {
  config.validate();
  Rng rng = Rng::derive(seed, kDeploymentStream);
  std::vector<Node> nodes(config.node_count);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Node& node = nodes[i];
    node.id = NodeId{i};
    node.position.x = rng.uniform(0.0, config.side_length);
    node.position.y = rng.uniform(0.0, config.side_length);
    node.initial_energy = config.energy_mode == EnergyMode::heterogeneous
                              ? rng.uniform(config.initial_energy, 2.0 * config.initial_energy)
                              : config.initial_energy;
    node.energy = node.initial_energy;
    node.alive = true;
  }
  return nodes;
}

std::size_t cluster_count(std::size_t alive, double cluster_fraction) {
  if (alive == 0) return 0;
  const auto k = static_cast<std::size_t>(std::llround(cluster_fraction * static_cast<double>(alive)));
  return std::clamp<std::size_t>(k, 1, alive);
}

std::size_t count_alive(const std::vector<Node>& nodes) {
  return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.alive; }));
}

double total_energy(const std::vector<Node>& nodes) {
  double sum = 0.0;
  for (const Node& n : nodes) sum += n.energy;
  return sum;
}

double total_initial_energy(const std::vector<Node>& nodes) {
  double sum = 0.0;
  for (const Node& n : nodes) sum += n.initial_energy;
  return sum;
}

std::vector<NodeId> alive_ids(const std::vector<Node>& nodes) {
  std::vector<NodeId> ids;
  ids.reserve(nodes.size());
  for (const Node& n : nodes)
    if (n.alive) ids.push_back(n.id);
  return ids;
}

}  // namespace wsnsim
