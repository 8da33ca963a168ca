#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "unit/test_support.hpp"
#include "wsnsim/simulation.hpp"

using namespace wsnsim;

namespace {

SimulationSetup small_setup() {
  SimulationSetup setup;
  setup.firefly.population = 10;
  setup.firefly.max_generations = 10;
  return setup;
}

}  // namespace

TEST_CASE("protocol names") {
  for (const ProtocolKind k : all_protocols) CHECK(parse_protocol(to_string(k)) == k);
  CHECK_THROWS_AS(parse_protocol("pso"), std::invalid_argument);
}

TEST_CASE("single alive node heads its own cluster") {
  auto nodes = test::make_nodes({{40, 30}});
  const SimulationSetup setup = small_setup();
  ProtocolRuntime runtime{ProtocolKind::ffa, LeachState(0.05)};
  Rng rng(1);
  const RoundRecord r = run_round(nodes, setup, runtime, rng, 1);
  REQUIRE(r.heads == std::vector<NodeId>{NodeId{0}});
  const double expected = ch_round_energy(setup.radio, 0, euclidean({40, 30}, {100, 100}));
  CHECK(r.per_node_dissipation[0] == expected);
  CHECK(nodes[0].energy == doctest::Approx(0.2 - expected));
}

TEST_CASE("round accounting matches an itemized sum") {
  // 100 nodes packed around the base station so every link is below d0.
  FieldConfig field;
  field.side_length = 120.0;
  field.base_station = {60, 60};
  auto nodes = deploy(field, 9);
  SimulationSetup setup = small_setup();
  setup.field = field;
  setup.firefly = FireflyParams::for_field(120.0);
  setup.firefly.max_generations = 5;
  ProtocolRuntime runtime{ProtocolKind::jfa, LeachState(0.05)};
  const auto before = nodes;
  Rng rng(3);
  const RoundRecord r = run_round(nodes, setup, runtime, rng, 1);
  REQUIRE(r.heads.size() == 5);

  const RadioParams& radio = setup.radio;
  const double l = radio.payload_bits;
  double expected = 0.0;
  for (const Node& n : before) {
    bool is_head = false;
    for (const NodeId h : r.heads) is_head = is_head || h == n.id;
    if (is_head) continue;
    double best = INFINITY;
    for (const NodeId h : r.heads) best = std::min(best, euclidean(n.position, before[h.value].position));
    CHECK(best < threshold_distance(radio));
    expected += l * radio.e_elec + l * radio.eps_fs * best * best;
  }
  for (const NodeId h : r.heads) {
    std::size_t members = 0;
    for (const Node& n : before) {
      if (n.id == h) continue;
      bool other_head = false;
      for (const NodeId o : r.heads) other_head = other_head || o == n.id;
      if (other_head) continue;
      std::size_t nearest = 0;
      double best = INFINITY;
      for (std::size_t k = 0; k < r.heads.size(); ++k) {
        const double d = euclidean(n.position, before[r.heads[k].value].position);
        if (d < best) {
          best = d;
          nearest = k;
        }
      }
      if (r.heads[nearest] == h) ++members;
    }
    const double d = euclidean(before[h.value].position, field.base_station);
    expected += members * l * radio.e_elec + (members + 1) * l * radio.e_da + l * radio.e_elec + l * radio.eps_fs * d * d;
  }
  double dissipated = 0.0;
  for (const double d : r.per_node_dissipation) dissipated += d;
  CHECK(dissipated == doctest::Approx(expected).epsilon(1e-12));
  CHECK(total_energy(before) - total_energy(nodes) == doctest::Approx(dissipated).epsilon(1e-12));
}

TEST_CASE("LEACH round without heads sends everything to the base station") {
  auto nodes = test::make_nodes({{10, 10}, {190, 100}});
  SimulationSetup setup = small_setup();
  ProtocolRuntime runtime{ProtocolKind::leach, LeachState(0.5)};
  runtime.leach.round = 1;  // last round of an epoch; G is empty
  runtime.leach.not_yet_head.assign(2, false);
  Rng rng(0);
  // Round 1 is the final epoch round, but nobody is in G.
  const RoundRecord r = run_round(nodes, setup, runtime, rng, 2);
  CHECK(r.heads.empty());
  for (std::size_t i = 0; i < 2; ++i) {
    const Point p = i == 0 ? Point{10, 10} : Point{190, 100};
    CHECK(r.per_node_dissipation[i] == tx_energy(setup.radio, 4000, euclidean(p, {100, 100})));
  }
}

TEST_CASE("a node dies in the round that exhausts it") {
  const SimulationSetup setup = small_setup();
  const double need = ch_round_energy(setup.radio, 0, euclidean({70, 60}, {100, 100}));
  auto nodes = test::make_nodes({{70, 60}}, need);
  Rng rng(2);
  const LifetimeSummary s = run_lifetime(nodes, setup, ProtocolKind::ffa, rng);
  CHECK(s.lnd == 1);
  CHECK(s.fnd == 1);
  CHECK(s.hnd == 1);
  REQUIRE(s.rounds.size() == 1);
  CHECK(s.rounds[0].per_node_dissipation[0] == need);
}

TEST_CASE("a zero-energy network has no rounds") {
  auto nodes = test::make_nodes({{1, 1}, {2, 2}}, 0.0);
  for (Node& n : nodes) n.alive = false;
  Rng rng(0);
  const LifetimeSummary s = run_lifetime(nodes, small_setup(), ProtocolKind::leach, rng);
  CHECK(s.lnd == 0);
  CHECK(s.rounds.empty());
}

TEST_CASE("lifetime invariants hold for every protocol") {
  SimulationSetup setup = small_setup();
  setup.field.node_count = 40;
  for (const ProtocolKind kind : all_protocols) {
    const LifetimeSummary s = run_simulation(setup, kind, 11);
    const auto nodes = deploy(setup.field, 11);
    const double initial = total_initial_energy(nodes);
    CHECK(s.fnd <= s.hnd);
    CHECK(s.hnd <= s.lnd);
    CHECK(s.lnd == s.rounds.size());
    CHECK(s.rounds.back().alive == 0);
    double dissipated = 0.0;
    for (std::size_t r = 0; r < s.rounds.size(); ++r) {
      const RoundRecord& rec = s.rounds[r];
      for (const double d : rec.per_node_dissipation) dissipated += d;
      CHECK(std::abs(initial - (dissipated + rec.total_energy)) <= 1e-9 * initial);
      if (r > 0) {
        CHECK(rec.alive <= s.rounds[r - 1].alive);
        CHECK(rec.total_energy <= s.rounds[r - 1].total_energy);
      }
      if (kind != ProtocolKind::leach) {
        const std::size_t alive_before = r == 0 ? 40 : s.rounds[r - 1].alive;
        CHECK(rec.heads.size() == cluster_count(alive_before, setup.field.cluster_fraction));
      }
    }
  }
}

TEST_CASE("same seed gives the same summary; deployment is shared across protocols") {
  SimulationSetup setup = small_setup();
  setup.field.node_count = 30;
  const LifetimeSummary a = run_simulation(setup, ProtocolKind::jfa, 4);
  const LifetimeSummary b = run_simulation(setup, ProtocolKind::jfa, 4);
  REQUIRE(a.rounds.size() == b.rounds.size());
  for (std::size_t r = 0; r < a.rounds.size(); ++r) {
    CHECK(a.rounds[r].heads == b.rounds[r].heads);
    CHECK(a.rounds[r].per_node_dissipation == b.rounds[r].per_node_dissipation);
  }

  const std::uint64_t seeds[] = {4};
  const Comparison c = compare(setup, seeds);
  REQUIRE(c.runs.size() == 3);
  CHECK(c.runs[2].summary.lnd == a.lnd);
  // Round-one dissipation is computed from the shared deployment.
  const auto nodes = deploy(setup.field, 4);
  for (const RunResult& run : c.runs) CHECK(run.summary.rounds.front().per_node_dissipation.size() == nodes.size());
}

TEST_CASE("summary statistics") {
  const MetricStats odd = summarize({3, 1, 2});
  CHECK(odd.median == 2.0);
  CHECK(odd.mean == 2.0);
  const MetricStats even = summarize({4, 1, 2, 3});
  CHECK(even.median == 2.5);
  CHECK(even.mean == 2.5);
}
