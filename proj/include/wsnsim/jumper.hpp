#ifndef WSNSIM_JUMPER_HPP
#define WSNSIM_JUMPER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "wsnsim/clustering.hpp"
#include "wsnsim/firefly.hpp"
#include "wsnsim/network.hpp"
#include "wsnsim/rng.hpp"

namespace wsnsim {

struct JumperParams {
  std::size_t eta = 5;  // worst-count threshold
  double omega = 0.1;   // qualification margin below the mean

  void validate() const;
};

// Per-firefly bookkeeping of the jumper search.
struct StatusRow {
  std::vector<Point> situation;
  double fitness = 0.0;
  std::size_t worst = 0;
  double qualification = 0.0;
};

struct StatusTable {
  std::vector<StatusRow> rows;

  double mean_qualification() const;
};

/// 1 / (1 + cost): higher is better.
double fitness_of(double cost);

/// Adds this generation's fitness to firefly i's running qualification.
void update_qualification(StatusTable& table, std::size_t i, double fitness);

/// Every firefly sharing the highest cost this generation gets worst += 1.
void update_worst(StatusTable& table, std::span<const double> costs);

/**
 * Firefly m is in hazard when it holds the largest worst count and that count
 * exceeds eta, it has the lowest qualification, and that qualification sits
 * more than omega below the mean.
 */
bool is_hazard(const StatusTable& table, std::size_t m, const JumperParams& params);

/**
 * Re-initializes firefly m on K random eligible nodes and rewrites its row:
 * situation and fitness from the new solution, qualification set to
 * `mean_qualification` (the pre-jump population mean), worst reset to 0.
 */
void jump(Candidate& firefly, std::size_t m, StatusTable& table, double mean_qualification,
          const std::vector<Node>& nodes, std::span<const NodeId> eligible, std::size_t k,
          const CostWeights& weights, Rng& rng);

/// Jumper firefly search. With eta >= max_generations it never jumps and
/// reproduces optimize() exactly for the same rng state.
SearchResult optimize_jfa(const std::vector<Node>& nodes, std::size_t k, const FireflyParams& firefly_params,
                          const JumperParams& jumper_params, const CostWeights& weights, double side, Rng& rng,
                          Execution exec = Execution::serial);

}  // namespace wsnsim

#endif  // WSNSIM_JUMPER_HPP
