#pragma once

// Executable form of the light-spanner weight argument: the MST traversal
// line, weight scales of non-MST spanner edges, and per scale an unweighted
// graph K over interval representatives whose size dominates the scale's
// weight. Every inequality the argument relies on is checked exactly.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lightspan/graph.hpp"
#include "lightspan/greedy.hpp"
#include "lightspan/rational.hpp"

namespace lightspan {

/// Preorder walk of the MST laid out on a line. Position of the j-th
/// visited vertex is the sum of tree distances between consecutive visits.
struct TraversalPath {
  std::vector<Vertex> order;  // preorder, root 0, children by ascending id
  std::vector<Rational> pos;  // indexed by vertex
  Rational length;            // L
  Rational tree_weight;       // w(Z)

  bool within_twice_tree() const { return length <= 2 * tree_weight; }
};

TraversalPath build_path(const WeightedGraph& g, const Tree& z);

struct ScaleClass {
  int index = 0;  // i in 1..I
  Rational a;     // k^(i-1) * L / n; members have a < w <= k * a
  std::vector<EdgeId> edges;  // (weight, id) order
  Rational weight;
};

struct ScaleDecomposition {
  int levels = 0;  // I = ceil(log_k n)
  Rational unit;   // L / n
  std::vector<EdgeId> light;  // non-MST spanner edges with w <= L / n
  std::vector<ScaleClass> classes;  // one per i in 1..I, possibly empty
  /// Non-MST edges heavier than k^I * L / n. Greedy output never has any;
  /// an externally supplied spanner might.
  std::vector<EdgeId> rejected;
};

/// Throws std::invalid_argument if k < 2. Returns an empty decomposition
/// when L = 0.
ScaleDecomposition scale_decompose(const WeightedGraph& g, const SpannerResult& h, const Tree& z,
                                   const TraversalPath& path, int k);

struct MatchEdge {
  long q = 0;   // representative index on the u side (1-based interval)
  long q2 = 0;  // representative index on the v side
  EdgeId source = -1;
  Vertex u = 0;
  Vertex v = 0;
  int b = 0;
};

struct MatchGraph {
  int scale_index = 0;
  Rational a;
  long s = 0;  // number of intervals / representatives
  Rational interval_length;
  std::vector<MatchEdge> edges;  // F
  /// Sources whose matching came out smaller than b + 1 because the two
  /// neighborhoods overlap (only possible for large eps).
  std::vector<EdgeId> short_sources;

  /// Midpoint of interval j.
  Rational representative(long j) const { return Rational(2 * j - 1, 2) * interval_length; }
  /// Interval containing a position; boundary points go to the lower index.
  long interval_of(const Rational& position) const;
};

/// Throws std::invalid_argument if eps <= 0 or k < 2.
MatchGraph build_K(const WeightedGraph& g, const ScaleClass& cls, const TraversalPath& path, int k,
                   const Rational& eps);

struct Obs2Check {
  Rational lhs;  // |F| * a
  Rational rhs;  // w(E_i)
  bool per_source_ok = true;  // every source produced >= b + 1 edges
  bool pass() const { return lhs >= rhs && per_source_ok; }
};

Obs2Check check_obs2(const MatchGraph& kgraph, const ScaleClass& cls);

struct TourCheck {
  bool pass = true;
  Rational max_ratio;  // max tour length / source weight, 0 if F is empty
  std::optional<std::size_t> worst;
};

/// Tour for F-edge (q, q') with source (u, v): |r_q - pos u| + w + |pos v - r_q'|,
/// required to be at most (1 + eps/2) w.
TourCheck check_tours(const WeightedGraph& g, const MatchGraph& kgraph, const TraversalPath& path,
                      const Rational& eps);

struct KStructureCheck {
  bool simple = true;
  std::optional<std::pair<std::size_t, std::size_t>> parallel;  // two F-edge indices
  bool matching = true;  // edges of one source share no representative
  std::optional<int> girth;  // nullopt: K is a forest
  std::vector<long> cycle;   // representative indices of a shortest cycle
  bool girth_ok = true;      // girth >= 2k + 1

  bool pass() const { return simple && matching && girth_ok; }
};

KStructureCheck check_K_simple_and_girth(const MatchGraph& kgraph, int k);

struct ScaleRow {
  int i = 0;
  Rational a;
  int num_edges = 0;
  Rational weight;
  long s = 0;
  long num_f = 0;
  Rational f_times_a;
  double girth_bound_times_a = 0;
  double thm2_ref = 0;
  Rational max_tour_ratio;
  std::optional<int> k_girth;
  bool obs2_ok = true;
  bool per_source_ok = true;
  bool tours_ok = true;
  bool simple_ok = true;
  bool girth_ok = true;
  int overlap_flags = 0;

  bool pass() const { return obs2_ok && per_source_ok && tours_ok && simple_ok && girth_ok; }
};

/// One row per scale. kgraphs[i] must be built from decomposition.classes[i].
std::vector<ScaleRow> per_scale_weight_report(const WeightedGraph& g, const TraversalPath& path,
                                              const ScaleDecomposition& decomposition,
                                              const std::vector<MatchGraph>& kgraphs, int k,
                                              const Rational& eps);

struct ScaleAnalysis {
  Tree z;
  TraversalPath path;
  ScaleDecomposition decomposition;
  std::vector<MatchGraph> kgraphs;
  std::vector<ScaleRow> rows;

  bool path_ok() const { return path.within_twice_tree(); }
  bool all_pass() const;
  int populated_scales() const;
  int overlap_flags() const;
};

/// Full pipeline on an existing spanner: MST, path, scales, K per scale,
/// all checks.
ScaleAnalysis analyze_spanner(const WeightedGraph& g, const SpannerResult& h, int k,
                              const Rational& eps);

/// Fixed column order: i,a,edges,weight,s,f_edges,f_times_a,
/// girth_bound_times_a,thm2_ref,max_tour_ratio,k_girth,obs2_ok,
/// per_source_ok,tours_ok,simple_ok,girth_ok,overlap_flags
std::string scale_table_csv(const std::vector<ScaleRow>& rows);
nlohmann::json scale_table_json(const std::vector<ScaleRow>& rows);

/// Shortest round-trip decimal rendering used by every report.
std::string format_double(double x);

}  // namespace lightspan
