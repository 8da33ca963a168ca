#ifndef WSNSIM_TEST_SUPPORT_HPP
#define WSNSIM_TEST_SUPPORT_HPP

#include <vector>

#include "wsnsim/network.hpp"

namespace wsnsim::test {

// Alive nodes at the given positions, all with the same energy.
inline std::vector<Node> make_nodes(const std::vector<Point>& positions, double energy = 0.2) {
  std::vector<Node> nodes(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i)
    nodes[i] = Node{NodeId{i}, positions[i], energy, energy, true};
  return nodes;
}

}  // namespace wsnsim::test

#endif
