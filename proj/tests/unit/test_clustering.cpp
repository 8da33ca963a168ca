#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "unit/test_support.hpp"
#include "wsnsim/clustering.hpp"
#include "wsnsim/rng.hpp"

using namespace wsnsim;
using wsnsim::test::make_nodes;

namespace {

// Reference nearest-head search written directly against the coordinates.
std::size_t brute_nearest(const Node& n, const std::vector<Node>& nodes, const std::vector<NodeId>& heads) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < heads.size(); ++k) {
    const Point h = nodes[heads[k].value].position;
    const double d = std::hypot(n.position.x - h.x, n.position.y - h.y);
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("euclidean") {
  CHECK(euclidean({0, 0}, {3, 4}) == 5.0);
  CHECK(euclidean({7.5, -2}, {7.5, -2}) == 0.0);
  CHECK(euclidean({1, 1}, {4, 5}) == 5.0);
}

TEST_CASE("assign_members basics") {
  const auto nodes = make_nodes({{0, 0}, {10, 0}, {5, 0}, {1, 1}});
  SUBCASE("single head takes everyone") {
    const std::vector<NodeId> heads{NodeId{1}};
    const Clustering c = assign_members(nodes, heads);
    for (const std::size_t k : c.member_of) CHECK(k == 0);
    CHECK(c.member_count(0) == 3);
  }
  SUBCASE("equidistant node goes to the first listed head") {
    const std::vector<NodeId> heads{NodeId{1}, NodeId{0}};
    const Clustering c = assign_members(nodes, heads);
    CHECK(c.member_of[2] == 0);  // (5,0) is 5 m from both
    CHECK(c.member_of[3] == 1);
  }
  SUBCASE("empty head list with alive nodes") {
    CHECK_THROWS_AS(assign_members(nodes, std::vector<NodeId>{}), std::invalid_argument);
  }
  SUBCASE("dead head rejected, dead nodes unassigned") {
    auto copy = nodes;
    copy[0].alive = false;
    CHECK_THROWS_AS(assign_members(copy, std::vector<NodeId>{NodeId{0}}), std::invalid_argument);
    const Clustering c = assign_members(copy, std::vector<NodeId>{NodeId{1}});
    CHECK(c.member_of[0] == Clustering::unassigned);
  }
}

TEST_CASE("assign_members: two opposite corners against a distance table") {
  const auto nodes = make_nodes({{0, 0}, {200, 200}, {30, 20}, {170, 150}, {90, 95}, {120, 60}});
  const std::vector<NodeId> heads{NodeId{0}, NodeId{1}};
  const Clustering c = assign_members(nodes, heads);
  // Distances to (0,0) / (200,200): (30,20) 36.1/233.5, (170,150) 226.7/58.3,
  // (90,95) 130.9/148.4, (120,60) 134.2/161.2.
  CHECK(c.member_of == std::vector<std::size_t>{0, 1, 0, 1, 0, 0});
}

TEST_CASE("assign_members matches brute force on random instances") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.below(49);
    std::vector<Point> pts(n);
    for (Point& p : pts) p = {rng.uniform(0, 200), rng.uniform(0, 200)};
    const auto nodes = make_nodes(pts);
    const std::size_t k = 1 + rng.below(n);
    std::vector<NodeId> heads;
    for (std::size_t i = 0; i < n && heads.size() < k; ++i)
      if (rng.uniform01() < 0.5 || n - i == k - heads.size()) heads.push_back(NodeId{i});
    const Clustering c = assign_members(nodes, heads);
    for (std::size_t i = 0; i < n; ++i) {
      bool is_head = false;
      for (std::size_t h = 0; h < heads.size(); ++h)
        if (heads[h].value == i) {
          is_head = true;
          CHECK(c.member_of[i] == h);
        }
      if (!is_head) CHECK(c.member_of[i] == brute_nearest(nodes[i], nodes, heads));
    }
  }
}

TEST_CASE("f1 counts the head as a zero-distance member") {
  const auto nodes = make_nodes({{0, 0}, {3, 4}, {0, 5}});
  const std::vector<NodeId> heads{NodeId{0}};
  CHECK(f1(assign_members(nodes, heads), nodes) == doctest::Approx(10.0 / 3.0));

  const auto pair = make_nodes({{0, 0}, {6, 8}});
  CHECK(f1(assign_members(pair, std::vector<NodeId>{NodeId{0}}), pair) == doctest::Approx(5.0));

  const std::vector<NodeId> all{NodeId{0}, NodeId{1}, NodeId{2}};
  CHECK(f1(assign_members(nodes, all), nodes) == 0.0);
}

TEST_CASE("f1 takes the worst cluster") {
  const auto nodes = make_nodes({{0, 0}, {2, 0}, {100, 100}, {100, 110}, {100, 90}});
  const std::vector<NodeId> heads{NodeId{0}, NodeId{2}};
  // cluster 0: (0 + 2)/2 = 1; cluster 1: (0 + 10 + 10)/3.
  CHECK(f1(assign_members(nodes, heads), nodes) == doctest::Approx(20.0 / 3.0));
}

TEST_CASE("f2") {
  auto nodes = make_nodes(std::vector<Point>(10, Point{1, 1}));
  nodes[0].energy = 0.1;
  nodes[1].energy = 0.1;
  const std::vector<NodeId> heads{NodeId{0}, NodeId{1}};
  CHECK(f2(nodes, heads) == doctest::Approx(10.0));

  nodes[0].energy = 0.2;
  nodes[1].energy = 0.2;
  CHECK(f2(nodes, heads) == doctest::Approx(5.0));

  auto fresh = make_nodes({{0, 0}, {1, 0}, {2, 0}});
  CHECK(f2(fresh, std::vector<NodeId>{NodeId{0}, NodeId{1}, NodeId{2}}) == doctest::Approx(1.0));

  // Residual energy of dead non-heads does not enter the denominator.
  auto with_dead = fresh;
  with_dead[2].alive = false;
  with_dead[2].energy = 0.0;
  CHECK(f2(with_dead, std::vector<NodeId>{NodeId{0}}) == f2(fresh, std::vector<NodeId>{NodeId{0}}));

  nodes[0].energy = 0.0;
  nodes[1].energy = 0.0;
  CHECK_THROWS_AS(f2(nodes, heads), std::domain_error);
}

TEST_CASE("cost weighting") {
  // f1 = 10/3 (head-inclusive example), f2 = 10 with heads at half energy.
  std::vector<Point> pts{{0, 0}, {3, 4}, {0, 5}};
  for (int i = 0; i < 7; ++i) pts.push_back({500, 500});
  auto nodes = make_nodes(pts);
  for (std::size_t i = 3; i < nodes.size(); ++i) nodes[i].alive = false;
  nodes[0].energy = 0.1;
  nodes[9].alive = true;  // second head far away, alone
  nodes[9].energy = 0.1;
  const std::vector<NodeId> heads{NodeId{0}, NodeId{9}};
  const Clustering c = assign_members(nodes, heads);
  REQUIRE(f1(c, nodes) == doctest::Approx(10.0 / 3.0));
  REQUIRE(f2(nodes, heads) == doctest::Approx(10.0));
  CHECK(cost(CostWeights{1.0}, c, nodes) == doctest::Approx(10.0 / 3.0));
  CHECK(cost(CostWeights{0.0}, c, nodes) == doctest::Approx(10.0));
  CHECK(cost(CostWeights{0.5}, c, nodes) == doctest::Approx(20.0 / 3.0));
  CHECK_THROWS_AS(CostWeights{1.5}.validate(), std::invalid_argument);
}

TEST_CASE("cost is monotone in f1 and f2") {
  // Moving a member farther raises f1; draining a head raises f2.
  auto nodes = make_nodes({{0, 0}, {10, 0}, {50, 50}, {60, 50}});
  const std::vector<NodeId> heads{NodeId{0}, NodeId{2}};
  const CostWeights w{0.5};
  const double base = cost_of_heads(w, nodes, heads);
  auto farther = nodes;
  farther[1].position = {20, 0};
  CHECK(cost_of_heads(w, farther, heads) >= base);
  auto drained = nodes;
  drained[2].energy = 0.05;
  CHECK(cost_of_heads(w, drained, heads) >= base);
}
