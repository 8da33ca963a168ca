#ifndef WSNSIM_FIREFLY_HPP
#define WSNSIM_FIREFLY_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "wsnsim/clustering.hpp"
#include "wsnsim/geometry.hpp"
#include "wsnsim/kernels.hpp"
#include "wsnsim/network.hpp"
#include "wsnsim/rng.hpp"

namespace wsnsim {

struct FireflyParams {
  std::size_t population = 25;  // S
  std::size_t max_generations = 50;
  double beta0 = 1.0;
  double gamma = 1.0 / (200.0 * 200.0);  // 1/m^2
  double alpha = 10.0;                   // m
  double attractiveness_exponent = 2.0;

  /// Defaults scaled to a field of side `side`: gamma = 1/M^2, alpha = 0.05 M.
  static FireflyParams for_field(double side);

  void validate() const;
};

/// One search agent: K continuous head positions and the node set they snap to.
struct Candidate {
  std::vector<Point> positions;
  std::vector<NodeId> snapped_heads;
  double cost = 0.0;
  double brightness = 0.0;
};

/// Firefly that abandoned its trajectory during a jumper search.
struct JumpEvent {
  std::size_t generation = 0;
  std::size_t firefly = 0;

  friend bool operator==(const JumpEvent&, const JumpEvent&) = default;
};

struct SearchResult {
  std::vector<NodeId> heads;
  double best_cost = 0.0;
  /// Best cost seen up to and including each generation.
  std::vector<double> cost_trace;
  std::vector<JumpEvent> jumps;
};

double intensity_at(double source_intensity, double r, double gamma);

/// beta0 * exp(-gamma * r^m).
double attractiveness(const FireflyParams& params, double r);

/// Distance between two K-point position vectors viewed as 2K-dim points.
double firefly_distance(std::span<const Point> a, std::span<const Point> b);

/**
 * Moves firefly `from` toward the brighter `to`: attraction scaled by
 * attractiveness(r) plus alpha * U(-0.5, 0.5) per coordinate, then clamped to
 * [0, side]. Always consumes 2K draws from `rng`.
 */
std::vector<Point> move_towards(std::span<const Point> from, std::span<const Point> to,
                                const FireflyParams& params, double side, Rng& rng);

/**
 * Maps each position, in order, to the nearest eligible node not yet taken
 * (lowest NodeId on ties). Throws if fewer than K nodes are eligible.
 */
std::vector<NodeId> snap_to_nodes(std::span<const Point> positions, const std::vector<Node>& nodes,
                                  std::span<const NodeId> eligible);

/// Alive nodes holding at least the mean alive energy; all alive nodes when
/// that leaves fewer than `k`.
std::vector<NodeId> eligible_candidates(const std::vector<Node>& nodes, std::size_t k);

/// Firefly-algorithm cluster-head search. Deterministic in (inputs, rng state);
/// `exec` only changes how population costs are evaluated.
SearchResult optimize(const std::vector<Node>& nodes, std::size_t k, const FireflyParams& params,
                      const CostWeights& weights, double side, Rng& rng,
                      Execution exec = Execution::serial);

}  // namespace wsnsim

#endif  // WSNSIM_FIREFLY_HPP
