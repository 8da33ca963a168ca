#include "wsnsim/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace wsnsim {

OracleResult exhaustive_best(const std::vector<Node>& nodes, std::span<const NodeId> candidates, std::size_t k,
                             const CostWeights& weights) {
  if (k == 0 || k > candidates.size()) throw std::invalid_argument("need 1 <= k <= candidate count");
  std::vector<NodeId> sorted(candidates.begin(), candidates.end());
  std::sort(sorted.begin(), sorted.end());

  OracleResult best;
  best.cost = std::numeric_limits<double>::infinity();
  // Lexicographic walk over index combinations idx[0] < idx[1] < ... < idx[k-1].
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<NodeId> heads(k);
  const std::size_t n = sorted.size();
  while (true) {
    for (std::size_t i = 0; i < k; ++i) heads[i] = sorted[idx[i]];
    const double c = cost_of_heads(weights, nodes, heads);
    ++best.subsets_evaluated;
    if (c < best.cost) {
      best.cost = c;
      best.heads = heads;
    }
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return best;
}

}  // namespace wsnsim
