#include "lightspan/wgirth.hpp"

#include <algorithm>

namespace lightspan {

namespace {

// Largest integer d with (d + w) / w < best, i.e. d * q < (p - q) * w for
// best = p / q. Returns -1 when no positive distance can improve.
Weight improving_cap(const std::optional<Rational>& best, Weight w) {
  if (!best) return kInfinity - 1;
  const BigInt p = boost::multiprecision::numerator(*best);
  const BigInt q = boost::multiprecision::denominator(*best);
  const BigInt bound = (p - q) * w;  // need d * q < bound
  if (bound <= 0) return -1;
  BigInt cap = (bound - 1) / q;
  if (cap >= BigInt(kInfinity)) return kInfinity - 1;
  return cap.convert_to<Weight>();
}

}  // namespace

WeightedGirthResult weighted_girth(const WeightedGraph& g) {
  WeightedGirthResult result;
  Adjacency below(g.num_vertices());
  BoundedDijkstra search(g.num_vertices());
  for (EdgeId id : edge_order(g)) {
    const Edge& e = g.edge(id);
    const Weight cap = improving_cap(result.value, e.w);
    if (cap >= 1) {
      if (auto d = search.distance(below, e.u, e.v, cap)) {
        result.value = Rational(*d + e.w, e.w);
        result.cycle = search.last_path();
        result.cycle.push_back(id);
        result.heaviest = id;
      }
    }
    below.add(e);
  }
  return result;
}

WeightedGirthResult weighted_girth(const WeightedGraph& g, std::span<const EdgeId> ids) {
  const Subgraph sub = g.subgraph(ids);
  WeightedGirthResult result = weighted_girth(sub.graph);
  for (EdgeId& id : result.cycle) id = sub.original[id];
  if (result.heaviest) result.heaviest = sub.original[*result.heaviest];
  return result;
}

GreedyGirthCheck check_greedy_wgirth(const WeightedGraph& g, const Rational& t) {
  GreedyGirthCheck check;
  check.spanner = greedy_spanner(g, t);
  check.girth = weighted_girth(g, check.spanner.edges);
  check.threshold = t + 1;
  check.pass = check.girth.acyclic() || *check.girth.value > check.threshold;
  return check;
}

Rational lightness(const WeightedGraph& g) {
  const Tree z = mst(g);
  if (z.weight == 0) return Rational(1);
  return Rational(g.total_weight(), z.weight);
}

}  // namespace lightspan
