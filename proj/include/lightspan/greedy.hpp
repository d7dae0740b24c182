#pragma once

#include <optional>
#include <vector>

#include "lightspan/graph.hpp"
#include "lightspan/rational.hpp"

namespace lightspan {

struct EdgeDecision {
  bool added = false;
  /// Spanner distance between the endpoints when the edge was inspected and
  /// skipped (always <= t * w). Unset for added edges.
  std::optional<Weight> witness;
};

struct SpannerStats {
  int edge_count = 0;
  Weight weight = 0;
  Weight mst_weight = 0;
  Rational lightness;  // weight / mst_weight, 1 for single-vertex graphs
};

struct SpannerResult {
  Rational t;
  std::vector<EdgeId> edges;  // ascending id
  std::vector<EdgeDecision> decisions;  // indexed by graph edge id
  SpannerStats stats;

  bool contains(EdgeId id) const { return decisions.at(static_cast<std::size_t>(id)).added; }
};

/// Greedy t-spanner: edges in (weight, id) order, each added iff the
/// current spanner distance between its endpoints exceeds t * w.
/// Throws std::invalid_argument if t < 1, GraphError if g is disconnected.
SpannerResult greedy_spanner(const WeightedGraph& g, const Rational& t);

/// (2k - 1)(1 + eps).
Rational stretch_params(int k, const Rational& eps);

struct StretchReport {
  /// max over graph edges of d_H(u, v) / w(u, v); nullopt if some edge has
  /// its endpoints disconnected in H.
  std::optional<Rational> max_stretch;
  std::optional<EdgeId> argmax;

  bool within(const Rational& t) const { return max_stretch && *max_stretch <= t; }
};

/// Per-edge stretch of the spanner edge set `spanner` (ids into g). One
/// Dijkstra per vertex over the spanner.
StretchReport verify_stretch(const WeightedGraph& g, std::span<const EdgeId> spanner);
StretchReport verify_stretch(const WeightedGraph& g, const SpannerResult& h);

/// True iff every edge of the (unique) MST of g is in `spanner`.
bool contains_mst(const WeightedGraph& g, std::span<const EdgeId> spanner);

// Reference curves. The constants are hidden in the asymptotic bounds, so
// these are reported next to measurements and never asserted.

/// C * n^(1/k) * (1 + k / (eps^(1+1/k) * ln k)). Requires k >= 2.
double lightness_bound_new(double n, int k, double eps, double C = 1.0);

/// C * k * n^(1/k) / eps^(1+1/k).
double lightness_bound_cdns(double n, int k, double eps, double C = 1.0);

/// Edge bound for a greedy t-spanner via its girth floor(t) + 2.
double size_bound(double n, const Rational& t);

/// Sharper size bound n^(1 + 1/floor(ceil(t)/2)) + n, meaningful for t >= 2.
double size_bound_sharp(double n, const Rational& t);

}  // namespace lightspan
