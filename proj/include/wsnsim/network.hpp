#ifndef WSNSIM_NETWORK_HPP
#define WSNSIM_NETWORK_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "wsnsim/geometry.hpp"

namespace wsnsim {

/// Dense index of a sensor, 0..N-1, stable for a simulation's lifetime.
struct NodeId {
  std::size_t value = 0;

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

struct Node {
  NodeId id;
  Point position;
  double energy = 0.0;          // joules
  double initial_energy = 0.0;  // joules
  bool alive = false;
};

enum class EnergyMode { homogeneous, heterogeneous };

struct FieldConfig {
  double side_length = 200.0;  // M, meters
  std::size_t node_count = 100;
  Point base_station{100.0, 100.0};
  double cluster_fraction = 0.05;
  EnergyMode energy_mode = EnergyMode::homogeneous;
  double initial_energy = 0.2;  // E_0, joules

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/**
 * Scatters `node_count` sensors uniformly over [0, M]^2.
 *
 * Homogeneous mode gives every node E_0; heterogeneous mode draws each
 * node's initial energy uniformly in [E_0, 2 E_0]. Pure in (config, seed).
 */
std::vector<Node> deploy(const FieldConfig& config, std::uint64_t seed);

/// max(1, round(fraction * alive)), or 0 when nothing is alive.
std::size_t cluster_count(std::size_t alive, double cluster_fraction);

std::size_t count_alive(const std::vector<Node>& nodes);
double total_energy(const std::vector<Node>& nodes);
double total_initial_energy(const std::vector<Node>& nodes);

/// Indices of the alive nodes, ascending.
std::vector<NodeId> alive_ids(const std::vector<Node>& nodes);

}  // namespace wsnsim

#endif  // WSNSIM_NETWORK_HPP
