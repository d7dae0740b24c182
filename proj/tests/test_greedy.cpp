#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lightspan/greedy.hpp"
#include "oracles.hpp"

using namespace lightspan;

namespace {

const char* kTriangle = "3 3\n0 1 1\n1 2 1\n0 2 1";

// Exhaustive all-pairs check of d_H(u, v) <= t * d_G(u, v).
bool all_pairs_within(const WeightedGraph& g, const std::vector<EdgeId>& ids, const Rational& t) {
  const auto dg = oracle::floyd_warshall(g);
  const auto dh = oracle::floyd_warshall(g.subgraph(ids).graph);
  for (std::size_t u = 0; u < dg.size(); ++u)
    for (std::size_t v = 0; v < dg.size(); ++v)
      if (dh[u][v] == kInfinity || Rational(dh[u][v]) > t * dg[u][v]) return false;
  return true;
}

}  // namespace

TEST_CASE("greedy on a tree keeps the tree") {
  const WeightedGraph g = parse_graph("5 4\n0 1 3\n1 2 1\n1 3 2\n3 4 9");
  for (const Rational t : {Rational(1), Rational(2), Rational(7)}) {
    CHECK(greedy_spanner(g, t).edges == std::vector<EdgeId>{0, 1, 2, 3});
  }
}

TEST_CASE("greedy on the unit triangle") {
  const WeightedGraph g = parse_graph(kTriangle);
  const SpannerResult loose = greedy_spanner(g, 3);
  CHECK(loose.edges == std::vector<EdgeId>{0, 1});
  CHECK_FALSE(loose.decisions[2].added);
  CHECK(loose.decisions[2].witness == 2);
  CHECK(loose.stats.lightness == 1);

  const SpannerResult tight = greedy_spanner(g, Rational(3, 2));
  CHECK(tight.edges.size() == 3);
  CHECK(tight.stats.lightness == Rational(3, 2));
}

TEST_CASE("greedy rejects t < 1") {
  CHECK_THROWS_AS(greedy_spanner(parse_graph(kTriangle), Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("stretch parameters") {
  CHECK(stretch_params(1, 1) == 2);
  CHECK(stretch_params(2, Rational(1, 2)) == Rational(9, 2));
  CHECK(stretch_params(5, Rational(1, 10)) == Rational(99, 10));
}

TEST_CASE("verify_stretch examples") {
  const WeightedGraph g = parse_graph(kTriangle);
  const std::vector<EdgeId> all{0, 1, 2};
  CHECK(verify_stretch(g, all).max_stretch == Rational(1));
  const std::vector<EdgeId> tree{0, 1};
  const StretchReport r = verify_stretch(g, tree);
  CHECK(r.max_stretch == Rational(2));
  CHECK(r.argmax == 2);
  CHECK(r.within(2));
  CHECK_FALSE(r.within(Rational(3, 2)));
  const std::vector<EdgeId> broken{0};
  CHECK_FALSE(verify_stretch(g, broken).max_stretch.has_value());
}

TEST_CASE("greedy stretch on unit G(50, 0.3) against all pairs") {
  Rng rng(3);
  const WeightedGraph g = oracle::random_connected(rng, 50, 0.3, 1);
  const SpannerResult h = greedy_spanner(g, 3);
  CHECK(verify_stretch(g, h).within(3));
  CHECK(all_pairs_within(g, h.edges, 3));
}

TEST_CASE("greedy spanners satisfy stretch, MST containment and the exhaustive check") {
  Rng rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 40));
    const WeightedGraph g = oracle::random_connected(rng, n, 0.25, trial % 3 == 0 ? 3 : 500, trial % 2);
    for (const Rational t : {Rational(1), Rational(2), Rational(3), Rational(9, 2)}) {
      const SpannerResult h = greedy_spanner(g, t);
      CHECK(verify_stretch(g, h).within(t));
      CHECK(contains_mst(g, h.edges));
      CHECK(all_pairs_within(g, h.edges, t));
    }
  }
}

TEST_CASE("witnesses of skipped edges are the spanner distance at inspection") {
  Rng rng(31);
  const WeightedGraph g = oracle::random_connected(rng, 25, 0.3, 100);
  const Rational t(5, 2);
  const SpannerResult h = greedy_spanner(g, t);
  for (const Edge& e : g.edges()) {
    const EdgeDecision& d = h.decisions[e.id];
    if (d.added) {
      CHECK_FALSE(d.witness.has_value());
    } else {
      REQUIRE(d.witness.has_value());
      CHECK(Rational(*d.witness) <= t * e.w);
    }
  }
}

TEST_CASE("greedy size is monotone non-increasing in t, property") {
  Rng rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const WeightedGraph g = oracle::random_connected(rng, 30, 0.3, 200);
    std::size_t previous = g.num_edges() + 1;
    for (const Rational t : {Rational(1), Rational(3, 2), Rational(2), Rational(3), Rational(5), Rational(9)}) {
      const std::size_t size = greedy_spanner(g, t).edges.size();
      CHECK(size <= previous);
      previous = size;
    }
  }
}

TEST_CASE("contains_mst") {
  const WeightedGraph g = parse_graph("4 4\n0 1 1\n1 2 2\n2 3 3\n3 0 4");
  const std::vector<EdgeId> tree{0, 1, 2};
  const std::vector<EdgeId> other{0, 1, 3};
  CHECK(contains_mst(g, tree));
  CHECK_FALSE(contains_mst(g, other));
}

TEST_CASE("lightness reference curves") {
  CHECK(lightness_bound_new(1, 3, 1) == doctest::Approx(1 + 3 / std::log(3.0)));
  CHECK(lightness_bound_new(1024, 2, 1) == doctest::Approx(32 * (1 + 2 / std::log(2.0))));
  CHECK(lightness_bound_new(1024, 2, 1) == doctest::Approx(124.3).epsilon(1e-3));
  CHECK(lightness_bound_new(1024, 10, 1) == doctest::Approx(10.7).epsilon(5e-3));
  CHECK(lightness_bound_cdns(1, 1, 1) == doctest::Approx(1));
  CHECK(lightness_bound_cdns(1024, 2, 1) == doctest::Approx(64));
  CHECK(lightness_bound_cdns(1024, 10, 1) == doctest::Approx(20));
  CHECK_THROWS_AS(lightness_bound_new(10, 1, 1), std::invalid_argument);
}

TEST_CASE("size bounds") {
  CHECK(size_bound(100, 3) == doctest::Approx(girth_edge_bound(100, 5)));
  CHECK(size_bound_sharp(16, 3) == doctest::Approx(16 * 16 + 16));
}
