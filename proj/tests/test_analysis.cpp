#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lightspan/analysis.hpp"
#include "lightspan/generate.hpp"
#include "oracles.hpp"

using namespace lightspan;

namespace {

// Two vertices joined by one edge of weight 3/2, placed on a line of length 4
// at the given positions. With a = 1 and eps = 1 there are 32 intervals of
// length 1/8.
struct LineFixture {
  WeightedGraph g;
  TraversalPath path;
  ScaleClass cls;

  LineFixture(Rational pos_u, Rational pos_v) {
    const std::vector<EdgeSpec> edges{{0, 1, 15}};
    g = WeightedGraph(2, edges, 1);
    path.order = {0, 1};
    path.pos = {pos_u, pos_v};
    path.length = 4;
    path.tree_weight = 4;
    cls.index = 1;
    cls.a = 1;
    cls.edges = {0};
    cls.weight = Rational(3, 2);
  }
};

SpannerResult everything(const WeightedGraph& g) {
  SpannerResult h;
  h.t = 1;
  for (const Edge& e : g.edges()) {
    h.edges.push_back(e.id);
    h.decisions.push_back({true, std::nullopt});
  }
  return h;
}

}  // namespace

TEST_CASE("traversal path of a path graph") {
  const WeightedGraph g = parse_graph("3 2\n0 1 1\n1 2 1");
  const TraversalPath p = build_path(g, mst(g));
  CHECK(p.order == std::vector<Vertex>{0, 1, 2});
  CHECK(p.pos == std::vector<Rational>{0, 1, 2});
  CHECK(p.length == 2);
  CHECK(p.within_twice_tree());
}

TEST_CASE("traversal path of a star") {
  const WeightedGraph g = parse_graph("4 3\n0 1 1\n0 2 1\n0 3 1");
  const TraversalPath p = build_path(g, mst(g));
  CHECK(p.order == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(p.pos == std::vector<Rational>{0, 1, 3, 5});
  CHECK(p.length == 5);
  CHECK(p.tree_weight == 3);
  CHECK(p.within_twice_tree());
}

TEST_CASE("traversal path of a single vertex") {
  const WeightedGraph g(1, std::vector<EdgeSpec>{});
  const TraversalPath p = build_path(g, mst(g));
  CHECK(p.order == std::vector<Vertex>{0});
  CHECK(p.length == 0);
}

TEST_CASE("traversal positions match tree distances between consecutive visits") {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 40));
    const WeightedGraph g = oracle::random_connected(rng, n, 0.2, 100, trial % 3);
    const Tree z = mst(g);
    const TraversalPath p = build_path(g, z);
    const auto dz = oracle::floyd_warshall(g.subgraph(z.edges).graph);
    REQUIRE(p.order.size() == static_cast<std::size_t>(n));
    CHECK(p.order.front() == 0);
    Weight offset = 0;
    for (std::size_t j = 1; j < p.order.size(); ++j) {
      offset += dz[p.order[j - 1]][p.order[j]];
      CHECK(p.pos[p.order[j]] == g.to_rational(offset));
    }
    CHECK(p.length == g.to_rational(offset));
    CHECK(p.within_twice_tree());
  }
}

TEST_CASE("scale decomposition boundaries") {
  // MST is the path 0-1-2-3 with weights 1, 1, 2, so L = 4 and L/n = 1.
  const WeightedGraph g = parse_graph("4 5\n0 1 1\n1 2 1\n2 3 2\n0 2 1\n1 3 3");
  const Tree z = mst(g);
  REQUIRE(z.edges == std::vector<EdgeId>{0, 1, 2});
  const TraversalPath p = build_path(g, z);
  REQUIRE(p.length == 4);
  const ScaleDecomposition d = scale_decompose(g, everything(g), z, p, 2);
  CHECK(d.levels == 2);
  CHECK(d.unit == 1);
  CHECK(d.light == std::vector<EdgeId>{3});
  REQUIRE(d.classes.size() == 2);
  CHECK(d.classes[0].edges.empty());
  CHECK(d.classes[1].edges == std::vector<EdgeId>{4});
  CHECK(d.classes[1].a == 2);
  CHECK(d.classes[1].weight == 3);
  CHECK(d.rejected.empty());
  CHECK_THROWS_AS(scale_decompose(g, everything(g), z, p, 1), std::invalid_argument);
}

TEST_CASE("an MST-only spanner leaves every class empty") {
  Rng rng(43);
  const WeightedGraph g = oracle::random_connected(rng, 20, 0.0, 50);
  const Tree z = mst(g);
  const ScaleDecomposition d = scale_decompose(g, greedy_spanner(g, 3), z, build_path(g, z), 2);
  for (const ScaleClass& c : d.classes) CHECK(c.edges.empty());
  CHECK(d.light.empty());
}

TEST_CASE("interval lookup sends boundary points to the lower index") {
  MatchGraph K;
  K.s = 32;
  K.interval_length = Rational(1, 8);
  CHECK(K.interval_of(0) == 1);
  CHECK(K.interval_of(Rational(1, 8)) == 1);
  CHECK(K.interval_of(Rational(3, 16)) == 2);
  CHECK(K.interval_of(4) == 32);
  CHECK(K.representative(1) == Rational(1, 16));
}

TEST_CASE("interior edge with b = 1 yields three F-edges") {
  LineFixture f(1, Rational(5, 2));
  const MatchGraph K = build_K(f.g, f.cls, f.path, 2, 1);
  CHECK(K.s == 32);
  REQUIRE(K.edges.size() == 3);
  CHECK(K.edges[0].q == 7);
  CHECK(K.edges[0].q2 == 19);
  CHECK(K.edges[2].q == 9);
  CHECK(K.edges[2].q2 == 21);
  CHECK(K.short_sources.empty());

  const Obs2Check obs2 = check_obs2(K, f.cls);
  CHECK(obs2.lhs == 3);
  CHECK(obs2.rhs == Rational(3, 2));
  CHECK(obs2.pass());

  const TourCheck tours = check_tours(f.g, K, f.path, 1);
  CHECK(tours.pass);
  // Farthest pairing: |r_7 - 1| + 3/2 + |5/2 - r_19| = 3/16 + 3/2 + 3/16.
  CHECK(tours.max_ratio == (Rational(3, 2) + Rational(3, 8)) / Rational(3, 2));

  const KStructureCheck s = check_K_simple_and_girth(K, 2);
  CHECK(s.pass());
  CHECK_FALSE(s.girth.has_value());
}

TEST_CASE("edge at the left end of the path yields two F-edges") {
  LineFixture f(0, Rational(3, 2));
  const MatchGraph K = build_K(f.g, f.cls, f.path, 2, 1);
  REQUIRE(K.edges.size() == 2);
  CHECK(K.edges[0].q == 1);
  CHECK(K.edges[0].q2 == 11);
  CHECK(K.short_sources.empty());
  const Obs2Check obs2 = check_obs2(K, f.cls);
  CHECK(obs2.lhs == 2);
  CHECK(obs2.pass());
}

TEST_CASE("overlapping neighborhoods are flagged") {
  LineFixture f(1, Rational(9, 8));
  const MatchGraph K = build_K(f.g, f.cls, f.path, 2, 1);
  CHECK(K.short_sources == std::vector<EdgeId>{0});
  CHECK_FALSE(check_obs2(K, f.cls).per_source_ok);
}

TEST_CASE("empty class gives an empty matching graph that passes") {
  LineFixture f(1, Rational(5, 2));
  ScaleClass empty;
  empty.index = 1;
  empty.a = 1;
  const MatchGraph K = build_K(f.g, empty, f.path, 2, 1);
  CHECK(K.edges.empty());
  CHECK(check_obs2(K, empty).pass());
  CHECK(check_tours(f.g, K, f.path, 1).pass);
  CHECK(check_K_simple_and_girth(K, 2).pass());
}

TEST_CASE("structure checker catches an injected parallel edge") {
  LineFixture f(1, Rational(5, 2));
  MatchGraph K = build_K(f.g, f.cls, f.path, 2, 1);
  MatchEdge copy = K.edges[1];
  copy.source = 99;
  K.edges.push_back(copy);
  const KStructureCheck s = check_K_simple_and_girth(K, 2);
  CHECK_FALSE(s.simple);
  REQUIRE(s.parallel.has_value());
  CHECK(s.parallel->first == 1);
  CHECK(s.parallel->second == 3);
  CHECK_FALSE(s.pass());
}

TEST_CASE("structure checker catches a short cycle and a non-matching source") {
  MatchGraph K;
  K.s = 10;
  K.interval_length = 1;
  K.edges = {{1, 2, 0, 0, 1, 1}, {2, 3, 1, 0, 1, 1}, {3, 1, 2, 0, 1, 1}};
  KStructureCheck s = check_K_simple_and_girth(K, 2);
  CHECK(s.simple);
  CHECK(s.matching);
  CHECK(s.girth == 3);
  CHECK(s.cycle.size() == 3);
  CHECK_FALSE(s.girth_ok);
  CHECK(check_K_simple_and_girth(K, 1).girth_ok);

  K.edges = {{1, 2, 0, 0, 1, 1}, {1, 3, 0, 0, 1, 1}};
  s = check_K_simple_and_girth(K, 2);
  CHECK_FALSE(s.matching);
}

TEST_CASE("tour checker rejects a representative that is too far") {
  LineFixture f(1, Rational(5, 2));
  MatchGraph K = build_K(f.g, f.cls, f.path, 2, 1);
  K.edges[0].q = 30;
  const TourCheck tours = check_tours(f.g, K, f.path, 1);
  CHECK_FALSE(tours.pass);
  CHECK(tours.worst == 0);
}

TEST_CASE("full pipeline on weighted G(30, 0.3) passes every check") {
  Rng rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const WeightedGraph g = oracle::random_connected(rng, 30, 0.3, 1000);
    for (int k : {2, 3}) {
      for (const Rational eps : {Rational(1, 2), Rational(1)}) {
        const SpannerResult h = greedy_spanner(g, stretch_params(k, eps));
        const ScaleAnalysis a = analyze_spanner(g, h, k, eps);
        CHECK(a.all_pass());
        CHECK(a.overlap_flags() == 0);
        for (const ScaleRow& row : a.rows) {
          CHECK(row.obs2_ok);
          CHECK(row.tours_ok);
          CHECK(row.girth_ok);
        }
      }
    }
  }
}

TEST_CASE("n = 100 gives seven scale rows for k = 2") {
  const WeightedGraph g = generate({"gnp-exponential-weights", 100, 0.1, 5});
  const ScaleAnalysis a = analyze_spanner(g, greedy_spanner(g, stretch_params(2, 1)), 2, 1);
  CHECK(a.rows.size() == 7);
  CHECK(a.all_pass());
}

TEST_CASE("scale table serialization") {
  CHECK(scale_table_csv({}) ==
        "i,a,edges,weight,s,f_edges,f_times_a,girth_bound_times_a,thm2_ref,max_tour_ratio,k_girth,"
        "obs2_ok,per_source_ok,tours_ok,simple_ok,girth_ok,overlap_flags\n");
  CHECK(scale_table_json({}).empty());
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.0) == "2");
}
