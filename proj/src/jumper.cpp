#include "wsnsim/jumper.hpp"

#include <algorithm>
#include <stdexcept>

#include "swarm.hpp"

namespace wsnsim {

void JumperParams::validate() const {
  if (!(omega >= 0.0)) throw std::invalid_argument("omega must be non-negative");
}

double StatusTable::mean_qualification() const {
  if (rows.empty()) return 0.0;
  double sum = 0.0;
  for (const StatusRow& row : rows) sum += row.qualification;
  return sum / static_cast<double>(rows.size());
}

double fitness_of(double cost) { return 1.0 / (1.0 + cost); }

void update_qualification(StatusTable& table, std::size_t i, double fitness) {
  table.rows.at(i).qualification += fitness;
}

void update_worst(StatusTable& table, std::span<const double> costs) {
  if (costs.empty()) return;
  const double worst_cost = *std::max_element(costs.begin(), costs.end());
  for (std::size_t i = 0; i < costs.size(); ++i)
    if (costs[i] == worst_cost) ++table.rows.at(i).worst;
}

bool is_hazard(const StatusTable& table, std::size_t m, const JumperParams& params) {
  const auto& rows = table.rows;
  const StatusRow& row = rows.at(m);
  std::size_t max_worst = 0;
  double min_qual = row.qualification;
  for (const StatusRow& r : rows) {
    max_worst = std::max(max_worst, r.worst);
    min_qual = std::min(min_qual, r.qualification);
  }
  return row.worst == max_worst && row.worst > params.eta && row.qualification == min_qual &&
         row.qualification < table.mean_qualification() - params.omega;
}

void jump(Candidate& firefly, std::size_t m, StatusTable& table, double mean_qualification,
          const std::vector<Node>& nodes, std::span<const NodeId> eligible, std::size_t k,
          const CostWeights& weights, Rng& rng) {
  firefly.positions = detail::random_situation(nodes, eligible, k, rng);
  firefly.snapped_heads = snap_to_nodes(firefly.positions, nodes, eligible);
  firefly.cost = cost_of_heads(weights, nodes, firefly.snapped_heads);
  firefly.brightness = fitness_of(firefly.cost);

  StatusRow& row = table.rows.at(m);
  row.situation = firefly.positions;
  row.fitness = firefly.brightness;
  row.qualification = mean_qualification;
  row.worst = 0;
}

SearchResult optimize_jfa(const std::vector<Node>& nodes, std::size_t k, const FireflyParams& firefly_params,
                          const JumperParams& jumper_params, const CostWeights& weights, double side, Rng& rng,
                          Execution exec) {
  jumper_params.validate();
  return detail::run_swarm(nodes, k, firefly_params, &jumper_params, weights, side, rng, exec);
}

}  // namespace wsnsim
