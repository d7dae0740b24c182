#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lightspan/wgirth.hpp"
#include "oracles.hpp"

using namespace lightspan;

namespace {

Rational cycle_value(const WeightedGraph& g, const std::vector<EdgeId>& cycle) {
  Weight total = 0;
  Weight heaviest = 0;
  for (EdgeId id : cycle) {
    total += g.edge(id).w;
    heaviest = std::max(heaviest, g.edge(id).w);
  }
  return Rational(total, heaviest);
}

// Consecutive witness edges share an endpoint and the walk closes.
bool is_closed_walk(const WeightedGraph& g, const std::vector<EdgeId>& cycle) {
  std::map<Vertex, int> degree;
  for (EdgeId id : cycle) {
    ++degree[g.edge(id).u];
    ++degree[g.edge(id).v];
  }
  for (auto [v, d] : degree)
    if (d != 2) return false;
  return cycle.size() >= 3;
}

}  // namespace

TEST_CASE("weighted girth examples") {
  CHECK(weighted_girth(parse_graph("3 3\n0 1 1\n1 2 1\n0 2 1")).value == Rational(3));
  const WeightedGirthResult r = weighted_girth(parse_graph("3 3\n0 1 1\n1 2 1\n0 2 2"));
  CHECK(r.value == Rational(2));
  CHECK(r.heaviest == 2);
  CHECK(weighted_girth(parse_graph("4 3\n0 1 1\n1 2 4\n1 3 2")).acyclic());
}

TEST_CASE("weighted girth of K4 with weights 1..6 matches cycle enumeration") {
  const WeightedGraph g = parse_graph("4 6\n0 1 1\n0 2 2\n0 3 3\n1 2 4\n1 3 5\n2 3 6");
  const WeightedGirthResult r = weighted_girth(g);
  CHECK(r.value == oracle::weighted_girth_by_cycles(g));
  CHECK(r.value == Rational(7, 4));
  CHECK(cycle_value(g, r.cycle) == *r.value);
  CHECK(is_closed_walk(g, r.cycle));
}

TEST_CASE("weighted girth agrees with cycle enumeration on random graphs") {
  Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(3, 8));
    const WeightedGraph g = oracle::random_connected(rng, n, rng.uniform01() * 0.7, trial % 4 ? 1000 : 3, trial % 3);
    const WeightedGirthResult r = weighted_girth(g);
    REQUIRE(r.value == oracle::weighted_girth_by_cycles(g));
    if (r.value) {
      CHECK(cycle_value(g, r.cycle) == *r.value);
      CHECK(is_closed_walk(g, r.cycle));
    }
  }
}

TEST_CASE("weighted girth equals unweighted girth on unit weights, property") {
  Rng rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 25));
    const WeightedGraph g = oracle::random_connected(rng, n, rng.uniform01() * 0.4, 1);
    const WeightedGirthResult r = weighted_girth(g);
    const std::optional<int> plain = unweighted_girth(g);
    CHECK(r.value.has_value() == plain.has_value());
    if (plain) CHECK(*r.value == *plain);
  }
}

TEST_CASE("weighted girth is invariant under scaling, property") {
  Rng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const WeightedGraph g = oracle::random_connected(rng, 12, 0.3, 100);
    const Weight factor = rng.uniform_int(2, 1000);
    CHECK(weighted_girth(g).value == weighted_girth(g.scaled(factor)).value);
  }
}

TEST_CASE("subgraph weighted girth maps witnesses back") {
  const WeightedGraph g = parse_graph("4 5\n0 1 1\n1 2 1\n2 3 1\n3 0 1\n0 2 5");
  const std::vector<EdgeId> ids{0, 1, 4};
  const WeightedGirthResult r = weighted_girth(g, ids);
  CHECK(r.value == Rational(7, 5));
  CHECK(r.heaviest == 4);
  std::vector<EdgeId> cycle = r.cycle;
  std::sort(cycle.begin(), cycle.end());
  CHECK(cycle == ids);
}

TEST_CASE("greedy weighted girth check") {
  const GreedyGirthCheck tri = check_greedy_wgirth(parse_graph("3 3\n0 1 1\n1 2 1\n0 2 1"), Rational(3, 2));
  CHECK(tri.spanner.edges.size() == 3);
  CHECK(tri.girth.value == Rational(3));
  CHECK(tri.threshold == Rational(5, 2));
  CHECK(tri.pass);

  const GreedyGirthCheck tree = check_greedy_wgirth(parse_graph("4 3\n0 1 1\n1 2 4\n1 3 2"), 2);
  CHECK(tree.girth.acyclic());
  CHECK(tree.pass);

  Rng rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    const WeightedGraph g = oracle::random_connected(rng, 30, 0.3, trial % 2 ? 1 : 300);
    for (const Rational t : {Rational(2), Rational(3), Rational(9, 2)}) CHECK(check_greedy_wgirth(g, t).pass);
  }
}

TEST_CASE("lightness of a witness graph") {
  CHECK(lightness(parse_graph("3 3\n0 1 1\n1 2 1\n0 2 1")) == Rational(3, 2));
  CHECK(lightness(parse_graph("2 1\n0 1 5")) == 1);
}

TEST_CASE("conjecture search: triangle") {
  const ConjectureRecord r = conjecture_search({3, 3, 500, 1});
  CHECK_FALSE(r.empty);
  CHECK(r.unweighted_exhaustive);
  CHECK(r.unweighted_best == Rational(3, 2));
  CHECK(r.unweighted_girth == 3);
  CHECK(r.verified);
  CHECK(r.weighted_girth.has_value());
  CHECK(*r.weighted_girth >= 3);
  CHECK(lightness(r.weighted_witness.build()) == r.weighted_best);
}

TEST_CASE("conjecture search: four vertices, girth 4") {
  const ConjectureRecord r = conjecture_search({4, 4, 500, 2});
  CHECK(r.unweighted_best == Rational(4, 3));
  CHECK(r.unweighted_witness.edges.size() == 4);
  CHECK(r.verified);
  if (r.weighted_girth) CHECK(*r.weighted_girth >= 4);
}

TEST_CASE("conjecture search: budget 0 and invalid input") {
  const ConjectureRecord r = conjecture_search({5, 3, 0, 1});
  CHECK(r.empty);
  CHECK(r.candidates_evaluated == 0);
  CHECK(r.consistent_with_conjecture());
  CHECK_THROWS_AS(conjecture_search({10, 3, 10, 1}), std::invalid_argument);
  CHECK_THROWS_AS(conjecture_search({4, 1, 10, 1}), std::invalid_argument);
}

TEST_CASE("conjecture search is deterministic") {
  const ConjectureParams p{6, Rational(7, 2), 300, 9};
  CHECK(to_json(conjecture_search(p)).dump() == to_json(conjecture_search(p)).dump());
}
