#include "wsnsim/simulation.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <string>

namespace wsnsim {

std::string_view to_string(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::leach: return "leach";
    case ProtocolKind::ffa: return "ffa";
    case ProtocolKind::jfa: return "jfa";
  }
  return "unknown";
}

ProtocolKind parse_protocol(std::string_view name) {
  for (const ProtocolKind kind : all_protocols)
    if (to_string(kind) == name) return kind;
  throw std::invalid_argument("unknown protocol '" + std::string(name) + "' (expected leach, ffa or jfa)");
}

RoundRecord run_round(std::vector<Node>& nodes, const SimulationSetup& setup, ProtocolRuntime& runtime,
                      Rng& rng, std::size_t round) {
  RoundRecord record;
  record.round = round;
  const std::size_t alive = count_alive(nodes);
  if (alive == 0) throw std::invalid_argument("run_round needs at least one alive node");

  switch (runtime.kind) {
    case ProtocolKind::leach:
      record.heads = elect(runtime.leach, nodes, rng);
      break;
    case ProtocolKind::ffa:
    case ProtocolKind::jfa: {
      const std::size_t k = cluster_count(alive, setup.field.cluster_fraction);
      SearchResult search =
          runtime.kind == ProtocolKind::ffa
              ? optimize(nodes, k, setup.firefly, setup.weights, setup.field.side_length, rng, setup.execution)
              : optimize_jfa(nodes, k, setup.firefly, setup.jumper, setup.weights, setup.field.side_length, rng,
                             setup.execution);
      record.heads = std::move(search.heads);
      record.cost_trace = std::move(search.cost_trace);
      record.jump_events = std::move(search.jumps);
      record.jumps = record.jump_events.size();
      break;
    }
  }

  const RadioParams& radio = setup.radio;
  const double l = radio.payload_bits;
  const Point bs = setup.field.base_station;
  std::vector<double> required(nodes.size(), 0.0);

  if (record.heads.empty()) {
    // No head this round: every node reports straight to the base station.
    for (const Node& n : nodes)
      if (n.alive) required[n.id.value] = tx_energy(radio, l, euclidean(n.position, bs));
  } else {
    const Clustering clustering = assign_members(nodes, record.heads);
    std::vector<std::size_t> members(record.heads.size(), 0);
    for (const Node& n : nodes) {
      const std::size_t k = clustering.member_of[n.id.value];
      if (k == Clustering::unassigned || record.heads[k] == n.id) continue;
      ++members[k];
      required[n.id.value] = tx_energy(radio, l, euclidean(n.position, nodes[record.heads[k].value].position));
    }
    for (std::size_t k = 0; k < record.heads.size(); ++k) {
      const Node& head = nodes[record.heads[k].value];
      required[head.id.value] = ch_round_energy(radio, members[k], euclidean(head.position, bs));
    }
  }

  record.per_node_dissipation.assign(nodes.size(), 0.0);
  for (Node& n : nodes) {
    if (!n.alive) continue;
    const double need = required[n.id.value];
    if (need >= n.energy) {
      record.per_node_dissipation[n.id.value] = n.energy;
      n.energy = 0.0;
      n.alive = false;
    } else {
      record.per_node_dissipation[n.id.value] = need;
      n.energy -= need;
    }
  }
  record.alive = count_alive(nodes);
  record.total_energy = total_energy(nodes);
  return record;
}

LifetimeSummary run_lifetime(std::vector<Node> nodes, const SimulationSetup& setup, ProtocolKind kind, Rng& rng) {
  ProtocolRuntime runtime{kind, LeachState(setup.leach_p)};
  LifetimeSummary summary;
  const std::size_t n = nodes.size();
  std::size_t alive = count_alive(nodes);
  for (std::size_t round = 1; alive > 0; ++round) {
    summary.rounds.push_back(run_round(nodes, setup, runtime, rng, round));
    alive = summary.rounds.back().alive;
    if (summary.fnd == 0 && alive < n) summary.fnd = round;
    if (summary.hnd == 0 && 2 * alive <= n) summary.hnd = round;
    if (alive == 0) summary.lnd = round;
  }
  return summary;
}

LifetimeSummary run_simulation(const SimulationSetup& setup, ProtocolKind kind, std::uint64_t seed) {
  std::vector<Node> nodes = deploy(setup.field, seed);
  Rng protocol_rng = Rng::derive(seed, kProtocolStream);
  return run_lifetime(std::move(nodes), setup, kind, protocol_rng);
}

MetricStats summarize(std::vector<double> values) {
  MetricStats stats;
  if (values.empty()) return stats;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  stats.median = n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  double sum = 0.0;
  for (const double v : values) sum += v;
  stats.mean = sum / static_cast<double>(n);
  return stats;
}

Comparison compare(const SimulationSetup& setup, std::span<const std::uint64_t> seeds) {
  if (seeds.empty()) throw std::invalid_argument("compare needs at least one seed");
  constexpr std::size_t kProtocols = std::size(all_protocols);
  Comparison result;
  result.runs.resize(seeds.size() * kProtocols);
  for (std::size_t s = 0; s < seeds.size(); ++s)
    for (std::size_t p = 0; p < kProtocols; ++p) {
      result.runs[s * kProtocols + p].kind = all_protocols[p];
      result.runs[s * kProtocols + p].seed = seeds[s];
    }

  std::exception_ptr failure;
  const auto jobs = static_cast<std::int64_t>(result.runs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < jobs; ++i) {
    RunResult& run = result.runs[i];
    try {
      run.summary = run_simulation(setup, run.kind, run.seed);
    } catch (...) {
#pragma omp critical(wsnsim_compare_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (const ProtocolKind kind : all_protocols) {
    std::vector<double> fnd, hnd, lnd;
    for (const RunResult& run : result.runs) {
      if (run.kind != kind) continue;
      fnd.push_back(static_cast<double>(run.summary.fnd));
      hnd.push_back(static_cast<double>(run.summary.hnd));
      lnd.push_back(static_cast<double>(run.summary.lnd));
    }
    result.stats.push_back({kind, summarize(fnd), summarize(hnd), summarize(lnd)});
  }
  return result;
}

}  // namespace wsnsim
