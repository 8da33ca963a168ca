#include "wsnsim/leach.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wsnsim {

LeachState::LeachState(double probability) : p(probability) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("leach_p must lie in (0, 1)");
}

std::size_t epoch_length(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("leach_p must lie in (0, 1)");
  return static_cast<std::size_t>(std::llround(1.0 / p));
}

double leach_threshold(double p, std::size_t round, bool in_group) {
  if (!in_group) return 0.0;
  const std::size_t epoch = epoch_length(p);
  const std::size_t phase = round % epoch;
  const double denominator = 1.0 - p * static_cast<double>(phase);
  if (!(denominator > 0.0)) throw std::domain_error("LEACH threshold denominator is not positive");
  const double threshold = p / denominator;
  // p * epoch == 1 makes the last epoch round certain; rounding of 1 - p*(epoch-1)
  // would otherwise leave it a hair below 1.
  if (phase + 1 == epoch && std::abs(p * static_cast<double>(epoch) - 1.0) < 1e-9) return 1.0;
  return std::min(threshold, 1.0);
}

std::vector<NodeId> elect(LeachState& state, const std::vector<Node>& nodes, Rng& rng) {
  const std::size_t epoch = epoch_length(state.p);
  if (state.not_yet_head.size() != nodes.size()) state.not_yet_head.assign(nodes.size(), false);
  const bool epoch_start = state.round % epoch == 0;
  for (const Node& n : nodes) {
    if (!n.alive)
      state.not_yet_head[n.id.value] = false;
    else if (epoch_start)
      state.not_yet_head[n.id.value] = true;
  }

  std::vector<NodeId> heads;
  for (const Node& n : nodes) {
    if (!n.alive) continue;
    const bool in_group = state.not_yet_head[n.id.value];
    const double draw = rng.uniform01();
    if (draw < leach_threshold(state.p, state.round, in_group)) {
      heads.push_back(n.id);
      state.not_yet_head[n.id.value] = false;
    }
  }
  ++state.round;
  return heads;
}

Clustering join_nearest(const std::vector<Node>& nodes, std::span<const NodeId> heads) {
  return assign_members(nodes, heads);
}

}  // namespace wsnsim
