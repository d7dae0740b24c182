#include "lightspan/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lightspan {

namespace {

// Largest integer distance d with d <= t * w.
Weight stretch_cap(const Rational& t, Weight w) {
  BigInt cap = floor(t * Rational(w));
  if (cap >= BigInt(kInfinity)) return kInfinity - 1;
  return cap.convert_to<Weight>();
}

}  // namespace

SpannerResult greedy_spanner(const WeightedGraph& g, const Rational& t) {
  if (t < 1) throw std::invalid_argument("stretch t must be >= 1, got " + to_string(t));
  const Tree z = mst(g);

  SpannerResult result;
  result.t = t;
  result.decisions.resize(static_cast<std::size_t>(g.num_edges()));

  Adjacency spanner(g.num_vertices());
  BoundedDijkstra search(g.num_vertices());
  for (EdgeId id : edge_order(g)) {
    const Edge& e = g.edge(id);
    EdgeDecision& decision = result.decisions[static_cast<std::size_t>(id)];
    if (auto d = search.distance(spanner, e.u, e.v, stretch_cap(t, e.w))) {
      decision.witness = *d;
      continue;
    }
    decision.added = true;
    spanner.add(e);
    result.edges.push_back(id);
    result.stats.weight += e.w;
  }
  std::sort(result.edges.begin(), result.edges.end());
  result.stats.edge_count = static_cast<int>(result.edges.size());
  result.stats.mst_weight = z.weight;
  result.stats.lightness =
      z.weight > 0 ? Rational(result.stats.weight, z.weight) : Rational(1);
  return result;
}

Rational stretch_params(int k, const Rational& eps) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  return Rational(2 * k - 1) * (Rational(1) + eps);
}

StretchReport verify_stretch(const WeightedGraph& g, std::span<const EdgeId> spanner) {
  const int n = g.num_vertices();
  Adjacency h(n);
  for (EdgeId id : spanner) h.add(g.edge(id));

  // Each edge is checked from its smaller endpoint.
  std::vector<std::vector<EdgeId>> by_source(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) by_source[std::min(e.u, e.v)].push_back(e.id);

  StretchReport report;
  report.max_stretch = Rational(1);
  for (Vertex s = 0; s < n; ++s) {
    if (by_source[s].empty()) continue;
    const auto dist = distances_from(h, s);
    for (EdgeId id : by_source[s]) {
      const Edge& e = g.edge(id);
      const Weight d = dist[e.u == s ? e.v : e.u];
      if (d == kInfinity) {
        report.max_stretch.reset();
        report.argmax = id;
        return report;
      }
      Rational stretch(d, e.w);
      if (!report.argmax || stretch > *report.max_stretch) {
        report.max_stretch = stretch;
        report.argmax = id;
      }
    }
  }
  return report;
}

StretchReport verify_stretch(const WeightedGraph& g, const SpannerResult& h) {
  return verify_stretch(g, h.edges);
}

bool contains_mst(const WeightedGraph& g, std::span<const EdgeId> spanner) {
  std::vector<char> in(static_cast<std::size_t>(g.num_edges()), 0);
  for (EdgeId id : spanner) in.at(static_cast<std::size_t>(id)) = 1;
  const Tree z = mst(g);
  return std::all_of(z.edges.begin(), z.edges.end(), [&](EdgeId id) { return in[id] != 0; });
}

double lightness_bound_new(double n, int k, double eps, double C) {
  if (k < 2) throw std::invalid_argument("lightness_bound_new requires k >= 2");
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  const double kk = k;
  return C * std::pow(n, 1.0 / kk) * (1.0 + kk / (std::pow(eps, 1.0 + 1.0 / kk) * std::log(kk)));
}

double lightness_bound_cdns(double n, int k, double eps, double C) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  const double kk = k;
  return C * kk * std::pow(n, 1.0 / kk) / std::pow(eps, 1.0 + 1.0 / kk);
}

double size_bound(double n, const Rational& t) {
  const int girth = static_cast<int>(floor(t).convert_to<long long>()) + 2;
  return girth_edge_bound(n, girth);
}

double size_bound_sharp(double n, const Rational& t) {
  const long long half = ceil(t).convert_to<long long>() / 2;
  if (half < 1) throw std::invalid_argument("size_bound_sharp requires t > 1");
  return std::pow(n, 1.0 + 1.0 / static_cast<double>(half)) + n;
}

}  // namespace lightspan
