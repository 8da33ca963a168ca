#include "wsnsim/firefly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "swarm.hpp"
#include "wsnsim/jumper.hpp"

namespace wsnsim {

FireflyParams FireflyParams::for_field(double side) {
  FireflyParams params;
  params.gamma = 1.0 / (side * side);
  params.alpha = 0.05 * side;
  return params;
}

void FireflyParams::validate() const {
  if (population < 2) throw std::invalid_argument("population must be at least 2");
  if (max_generations < 1) throw std::invalid_argument("max_generations must be at least 1");
  if (!(beta0 > 0.0)) throw std::invalid_argument("beta0 must be positive");
  if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be non-negative");
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be non-negative");
  if (!(attractiveness_exponent > 0.0)) throw std::invalid_argument("attractiveness_exponent must be positive");
}

double intensity_at(double source_intensity, double r, double gamma) {
  return source_intensity * std::exp(-gamma * r * r);
}

double attractiveness(const FireflyParams& params, double r) {
  return params.beta0 * std::exp(-params.gamma * std::pow(r, params.attractiveness_exponent));
}

double firefly_distance(std::span<const Point> a, std::span<const Point> b) {
  if (a.size() != b.size()) throw std::invalid_argument("fireflies encode different cluster counts");
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += squared_distance(a[k], b[k]);
  return std::sqrt(sum);
}

std::vector<Point> move_towards(std::span<const Point> from, std::span<const Point> to,
                                const FireflyParams& params, double side, Rng& rng) {
  const double pull = attractiveness(params, firefly_distance(from, to));
  std::vector<Point> moved(from.begin(), from.end());
  for (std::size_t k = 0; k < moved.size(); ++k) {
    const double ex = rng.uniform01() - 0.5;
    const double ey = rng.uniform01() - 0.5;
    moved[k].x = std::clamp(moved[k].x + pull * (to[k].x - from[k].x) + params.alpha * ex, 0.0, side);
    moved[k].y = std::clamp(moved[k].y + pull * (to[k].y - from[k].y) + params.alpha * ey, 0.0, side);
  }
  return moved;
}

std::vector<NodeId> snap_to_nodes(std::span<const Point> positions, const std::vector<Node>& nodes,
                                  std::span<const NodeId> eligible) {
  if (eligible.size() < positions.size())
    throw std::invalid_argument("fewer eligible nodes than cluster heads");
  std::vector<bool> taken(eligible.size(), false);
  std::vector<NodeId> heads;
  heads.reserve(positions.size());
  for (const Point& p : positions) {
    std::size_t best = eligible.size();
    double best_d2 = 0.0;
    for (std::size_t e = 0; e < eligible.size(); ++e) {
      if (taken[e]) continue;
      const double d2 = squared_distance(p, nodes[eligible[e].value].position);
      if (best == eligible.size() || d2 < best_d2 || (d2 == best_d2 && eligible[e] < eligible[best])) {
        best = e;
        best_d2 = d2;
      }
    }
    taken[best] = true;
    heads.push_back(eligible[best]);
  }
  return heads;
}

std::vector<NodeId> eligible_candidates(const std::vector<Node>& nodes, std::size_t k) {
  std::vector<NodeId> alive = alive_ids(nodes);
  if (alive.empty()) return alive;
  double sum = 0.0;
  for (const NodeId id : alive) sum += nodes[id.value].energy;
  const double mean = sum / static_cast<double>(alive.size());
  // Relative slack so equal energies are not split by the rounding of the mean.
  const double floor = mean * (1.0 - 1e-12);
  std::vector<NodeId> eligible;
  for (const NodeId id : alive)
    if (nodes[id.value].energy >= floor) eligible.push_back(id);
  return eligible.size() < k ? alive : eligible;
}

namespace {

std::vector<NodeId> random_head_set(std::span<const NodeId> eligible, std::size_t k, Rng& rng) {
  std::vector<NodeId> pool(eligible.begin(), eligible.end());
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

std::vector<Point> positions_of(const std::vector<Node>& nodes, std::span<const NodeId> heads) {
  std::vector<Point> positions;
  positions.reserve(heads.size());
  for (const NodeId id : heads) positions.push_back(nodes[id.value].position);
  return positions;
}

}  // namespace

namespace detail {

std::vector<Point> random_situation(const std::vector<Node>& nodes, std::span<const NodeId> eligible,
                                    std::size_t k, Rng& rng) {
  return positions_of(nodes, random_head_set(eligible, k, rng));
}

// Shared generation loop; `jumper` switches on the status-table bookkeeping.
SearchResult run_swarm(const std::vector<Node>& nodes, std::size_t k, const FireflyParams& params,
                       const JumperParams* jumper, const CostWeights& weights, double side, Rng& rng,
                       Execution exec) {
  params.validate();
  weights.validate();
  if (k == 0) throw std::invalid_argument("cluster count must be at least 1");
  const std::vector<NodeId> eligible = eligible_candidates(nodes, k);
  if (eligible.size() < k) throw std::invalid_argument("fewer alive nodes than cluster heads");

  const std::size_t pop_size = params.population;
  std::vector<Candidate> swarm(pop_size);
  for (Candidate& c : swarm) c.positions = random_situation(nodes, eligible, k, rng);

  StatusTable table;
  if (jumper) {
    table.rows.resize(pop_size);
    for (std::size_t i = 0; i < pop_size; ++i) table.rows[i].situation = swarm[i].positions;
  }

  SearchResult result;
  result.best_cost = std::numeric_limits<double>::infinity();
  result.cost_trace.reserve(params.max_generations);
  std::vector<std::vector<NodeId>> head_sets(pop_size);

  for (std::size_t gen = 0; gen < params.max_generations; ++gen) {
    if (jumper) {
      // Hazards are judged against the table as it stood before any jump.
      const StatusTable snapshot = table;
      const double mean = snapshot.mean_qualification();
      for (std::size_t m = 0; m < pop_size; ++m) {
        if (!is_hazard(snapshot, m, *jumper)) continue;
        jump(swarm[m], m, table, mean, nodes, eligible, k, weights, rng);
        result.jumps.push_back({gen, m});
      }
    }

    for (std::size_t i = 0; i < pop_size; ++i) {
      swarm[i].snapped_heads = snap_to_nodes(swarm[i].positions, nodes, eligible);
      head_sets[i] = swarm[i].snapped_heads;
    }
    const std::vector<double> costs = kernels::population_costs(exec, weights, nodes, head_sets);
    for (std::size_t i = 0; i < pop_size; ++i) {
      swarm[i].cost = costs[i];
      swarm[i].brightness = fitness_of(costs[i]);
      if (costs[i] < result.best_cost) {
        result.best_cost = costs[i];
        result.heads = swarm[i].snapped_heads;
      }
    }
    result.cost_trace.push_back(result.best_cost);

    if (jumper) {
      for (std::size_t i = 0; i < pop_size; ++i) {
        table.rows[i].fitness = swarm[i].brightness;
        update_qualification(table, i, swarm[i].brightness);
      }
      update_worst(table, costs);
    }

    // Brightness stays at this generation's evaluation for the whole pass.
    for (std::size_t i = 0; i < pop_size; ++i) {
      for (std::size_t j = 0; j < pop_size; ++j) {
        if (!(swarm[j].brightness > swarm[i].brightness)) continue;
        swarm[i].positions = move_towards(swarm[i].positions, swarm[j].positions, params, side, rng);
        if (jumper) table.rows[i].situation = swarm[i].positions;
      }
    }
  }
  return result;
}

}  // namespace detail

SearchResult optimize(const std::vector<Node>& nodes, std::size_t k, const FireflyParams& params,
                      const CostWeights& weights, double side, Rng& rng, Execution exec) {
  return detail::run_swarm(nodes, k, params, nullptr, weights, side, rng, exec);
}

}  // namespace wsnsim
