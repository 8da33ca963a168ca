#ifndef WSNSIM_SIMULATION_HPP
#define WSNSIM_SIMULATION_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "wsnsim/clustering.hpp"
#include "wsnsim/firefly.hpp"
#include "wsnsim/jumper.hpp"
#include "wsnsim/kernels.hpp"
#include "wsnsim/leach.hpp"
#include "wsnsim/network.hpp"
#include "wsnsim/radio.hpp"
#include "wsnsim/rng.hpp"

namespace wsnsim {

enum class ProtocolKind { leach, ffa, jfa };

std::string_view to_string(ProtocolKind kind);
/// Parses "leach", "ffa" or "jfa"; throws std::invalid_argument otherwise.
ProtocolKind parse_protocol(std::string_view name);

inline constexpr ProtocolKind all_protocols[] = {ProtocolKind::leach, ProtocolKind::ffa, ProtocolKind::jfa};

/// Everything a run needs besides the seed.
struct SimulationSetup {
  FieldConfig field;
  RadioParams radio;
  CostWeights weights;
  FireflyParams firefly = FireflyParams::for_field(200.0);
  JumperParams jumper;
  double leach_p = 0.05;
  Execution execution = Execution::serial;
};

struct RoundRecord {
  std::size_t round = 0;  // 1-based
  std::size_t alive = 0;  // after the round
  double total_energy = 0.0;
  std::vector<NodeId> heads;
  std::vector<double> per_node_dissipation;
  std::size_t jumps = 0;
  std::vector<double> cost_trace;  // optimizer best cost per generation
  std::vector<JumpEvent> jump_events;
};

struct LifetimeSummary {
  std::size_t fnd = 0;  // first node death
  std::size_t hnd = 0;  // alive <= N/2
  std::size_t lnd = 0;  // alive == 0
  std::vector<RoundRecord> rounds;
};

/// Per-protocol state that persists across rounds.
struct ProtocolRuntime {
  ProtocolKind kind = ProtocolKind::leach;
  LeachState leach;
};

/**
 * Selects heads, builds clusters and charges one round of traffic.
 *
 * All charges are computed from the start-of-round state and applied
 * together; a node whose residual is short still completes the round, is
 * floored at zero and dies. `round` is the 1-based index stored in the record.
 */
RoundRecord run_round(std::vector<Node>& nodes, const SimulationSetup& setup, ProtocolRuntime& runtime,
                      Rng& rng, std::size_t round);

/// Runs on a given deployment until every node is dead.
LifetimeSummary run_lifetime(std::vector<Node> nodes, const SimulationSetup& setup, ProtocolKind kind,
                             Rng& rng);

/// Deploys from the deployment stream of `seed` and drives the protocol from
/// its protocol stream, so the protocol never perturbs the deployment.
LifetimeSummary run_simulation(const SimulationSetup& setup, ProtocolKind kind, std::uint64_t seed);

struct MetricStats {
  double median = 0.0;
  double mean = 0.0;
};

struct ProtocolStats {
  ProtocolKind kind = ProtocolKind::leach;
  MetricStats fnd;
  MetricStats hnd;
  MetricStats lnd;
};

struct RunResult {
  ProtocolKind kind = ProtocolKind::leach;
  std::uint64_t seed = 0;
  LifetimeSummary summary;
};

struct Comparison {
  /// Ordered by seed, then leach, ffa, jfa.
  std::vector<RunResult> runs;
  std::vector<ProtocolStats> stats;
};

/// Runs all three protocols on each seed's shared deployment. Independent
/// runs are fanned out with OpenMP; results match a sequential sweep exactly.
Comparison compare(const SimulationSetup& setup, std::span<const std::uint64_t> seeds);

MetricStats summarize(std::vector<double> values);

}  // namespace wsnsim

#endif  // WSNSIM_SIMULATION_HPP
