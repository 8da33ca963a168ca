#ifndef WSNSIM_ORACLE_HPP
#define WSNSIM_ORACLE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "wsnsim/clustering.hpp"
#include "wsnsim/network.hpp"

namespace wsnsim {

struct OracleResult {
  std::vector<NodeId> heads;  // ascending
  double cost = 0.0;
  std::size_t subsets_evaluated = 0;
};

/// Brute-force minimum clustering cost over every k-subset of `candidates`.
/// The lexicographically first minimizer wins ties. Meant for tiny instances.
OracleResult exhaustive_best(const std::vector<Node>& nodes, std::span<const NodeId> candidates, std::size_t k,
                             const CostWeights& weights);

}  // namespace wsnsim

#endif  // WSNSIM_ORACLE_HPP
