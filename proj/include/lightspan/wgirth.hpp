#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "lightspan/graph.hpp"
#include "lightspan/greedy.hpp"
#include "lightspan/rational.hpp"

namespace lightspan {

/// min over cycles C of w(C) / max_{e in C} w(e).
struct WeightedGirthResult {
  std::optional<Rational> value;  // nullopt: acyclic
  std::vector<EdgeId> cycle;      // witness, as edge ids
  std::optional<EdgeId> heaviest;

  bool acyclic() const { return !value.has_value(); }
};

/// Exact weighted girth. Every cycle is charged to its (weight, id)-maximal
/// edge e = (u, v); the best cycle through e as its maximum closes the
/// shortest u-v path over edges preceding e in that order.
WeightedGirthResult weighted_girth(const WeightedGraph& g);

/// Weighted girth of the subgraph formed by `ids`; the witness uses ids of g.
WeightedGirthResult weighted_girth(const WeightedGraph& g, std::span<const EdgeId> ids);

struct GreedyGirthCheck {
  SpannerResult spanner;
  WeightedGirthResult girth;
  Rational threshold;  // t + 1
  bool pass = false;
};

/// Runs greedy with stretch t and checks weighted_girth(H) > t + 1.
GreedyGirthCheck check_greedy_wgirth(const WeightedGraph& g, const Rational& t);

struct ConjectureParams {
  int n = 0;  // 2..9
  Rational target;  // weighted girth lower bound, > 1
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
};

struct WitnessGraph {
  int n = 0;
  std::vector<EdgeSpec> edges;
  int scale_digits = 0;

  WeightedGraph build() const { return WeightedGraph(n, edges, scale_digits); }
};

struct ConjectureRecord {
  int n = 0;
  Rational target;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  bool empty = true;  // budget 0: nothing searched

  bool unweighted_exhaustive = false;
  Rational unweighted_best;  // m / (n - 1) of the best girth >= ceil(target) graph
  WitnessGraph unweighted_witness;
  std::optional<int> unweighted_girth;

  Rational weighted_best;
  WitnessGraph weighted_witness;
  std::optional<Rational> weighted_girth;  // nullopt: acyclic witness

  std::uint64_t candidates_evaluated = 0;
  bool verified = false;  // both witnesses re-checked exactly

  /// Evidence only: whether the search found nothing beating the best
  /// unit-weight graph.
  bool consistent_with_conjecture() const { return empty || weighted_best <= unweighted_best; }
};

/// Searches for graphs on n vertices with weighted girth >= target and
/// maximal lightness. Unit-weight topologies are enumerated exhaustively for
/// n <= 7 and sampled for n = 8, 9; weighted candidates come from seeded
/// hill climbing over integer weights. Throws std::invalid_argument for n
/// outside 2..9 or target <= 1.
ConjectureRecord conjecture_search(const ConjectureParams& params);

nlohmann::json to_json(const ConjectureRecord& record);

/// w(G) / w(MST(G)) for a connected graph.
Rational lightness(const WeightedGraph& g);

}  // namespace lightspan
