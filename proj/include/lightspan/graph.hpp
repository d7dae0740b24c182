#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lightspan/rational.hpp"

namespace lightspan {

using Vertex = int;
using EdgeId = int;

// Edge weights are stored as integers over a per-graph decimal scale
// (10^scale_digits), so every weight is an exact rational and sums and
// comparisons are integer operations.
using Weight = std::int64_t;

inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max();

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 0;
  EdgeId id = 0;
};

struct Arc {
  Vertex to;
  Weight w;
  EdgeId id;
};

/// Undirected incidence lists. Used both for whole graphs and for
/// subgraphs that grow edge by edge (the spanner under construction).
class Adjacency {
 public:
  Adjacency() = default;
  explicit Adjacency(int n) : arcs_(static_cast<std::size_t>(n)) {}

  void add(const Edge& e) {
    arcs_[e.u].push_back({e.v, e.w, e.id});
    arcs_[e.v].push_back({e.u, e.w, e.id});
  }

  int num_vertices() const { return static_cast<int>(arcs_.size()); }
  std::span<const Arc> arcs(Vertex v) const { return arcs_[v]; }

 private:
  std::vector<std::vector<Arc>> arcs_;
};

enum class GraphErrc {
  malformed_line,
  non_positive_weight,
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  edge_count_mismatch,
  disconnected,
  weight_overflow,
};

std::string_view to_string(GraphErrc code);

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrc code, int line, const std::string& what);

  GraphErrc code() const { return code_; }
  /// 1-based line of the graph file, or 0 when not tied to a line.
  int line() const { return line_; }

 private:
  GraphErrc code_;
  int line_;
};

struct EdgeSpec {
  Vertex u;
  Vertex v;
  Weight w;  // scaled by 10^scale_digits
};

class WeightedGraph;

struct Subgraph;

/// Vertex/edge store with positive exact weights. Edge IDs are 0..m-1 in
/// construction order and never change. Immutable once built.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Throws GraphError on self-loops, duplicate edges, vertices out of
  /// range, non-positive weights or weight sums that would overflow.
  /// Connectivity is not required here; parse_graph enforces it.
  WeightedGraph(int n, std::span<const EdgeSpec> edges, int scale_digits = 0);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(static_cast<std::size_t>(id)); }
  const Adjacency& adjacency() const { return adj_; }

  int scale_digits() const { return scale_digits_; }
  Weight scale() const { return scale_; }
  Rational to_rational(Weight w) const { return Rational(w, scale_); }
  Rational weight(EdgeId id) const { return to_rational(edge(id).w); }
  Weight total_weight() const { return total_; }

  bool connected() const;
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

  /// Same vertex set, only the given edges. New IDs follow ascending
  /// original ID, so the relative (weight, id) order is preserved.
  Subgraph subgraph(std::span<const EdgeId> ids) const;

  /// Same topology with every weight multiplied by `factor` (> 0).
  WeightedGraph scaled(Weight factor) const;

 private:
  int n_ = 0;
  int scale_digits_ = 0;
  Weight scale_ = 1;
  Weight total_ = 0;
  std::vector<Edge> edges_;
  Adjacency adj_;
};

struct Subgraph {
  WeightedGraph graph;
  std::vector<EdgeId> original;  // new id -> id in the parent graph
};

/// Total order used everywhere: weight first, then edge id.
inline bool edge_less(const Edge& a, const Edge& b) {
  return a.w != b.w ? a.w < b.w : a.id < b.id;
}

/// Edge IDs sorted by (weight, id).
std::vector<EdgeId> edge_order(const WeightedGraph& g);

// --- text format -----------------------------------------------------------

/// Edge-list text: "n m" header, then m lines "u v w" with 0-based ids and
/// integer or decimal weights. '#' starts a comment line. The result is
/// connected; every violation is reported as GraphError naming the line.
WeightedGraph parse_graph(std::string_view text);

/// Writes edges in edge-ID order with exactly scale_digits decimals, so
/// parse_graph(serialize_graph(g)) reproduces g.
std::string serialize_graph(const WeightedGraph& g);

/// Exact decimal rendering of a scaled weight, e.g. 1250 at 3 digits -> "1.250".
std::string format_weight(Weight w, int scale_digits);

WeightedGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const WeightedGraph& g);

// --- minimum spanning tree -------------------------------------------------

struct Tree {
  Vertex root = 0;
  std::vector<EdgeId> edges;        // ascending id
  std::vector<Vertex> parent;       // -1 at the root
  std::vector<EdgeId> parent_edge;  // -1 at the root
  Weight weight = 0;
};

/// Kruskal under (weight, id) order, which makes the MST unique. Throws
/// GraphError(disconnected) if g is not connected.
Tree mst(const WeightedGraph& g);

// --- shortest paths --------------------------------------------------------

/// Dijkstra with a distance cap and a reusable workspace. Paths longer than
/// the cap are pruned as soon as they exceed it.
class BoundedDijkstra {
 public:
  explicit BoundedDijkstra(int n);

  /// Exact d(s, t) if it is <= cap, otherwise nullopt.
  std::optional<Weight> distance(const Adjacency& adj, Vertex s, Vertex t, Weight cap);

  /// Edge ids of the path found by the last successful distance() call,
  /// ordered from s to t.
  std::vector<EdgeId> last_path() const;

 private:
  void reset();

  std::vector<Weight> dist_;
  std::vector<EdgeId> pred_edge_;
  std::vector<Vertex> pred_vertex_;
  std::vector<Vertex> touched_;
  Vertex last_source_ = -1;
  Vertex last_target_ = -1;
};

/// Throws std::out_of_range for bad vertices, std::invalid_argument if cap <= 0.
std::optional<Weight> shortest_path_bounded(const Adjacency& adj, Vertex u, Vertex v, Weight cap);
std::optional<Weight> shortest_path_bounded(const WeightedGraph& g, Vertex u, Vertex v, Weight cap);

/// Plain single-source Dijkstra; unreachable vertices get kInfinity.
std::vector<Weight> distances_from(const Adjacency& adj, Vertex s);

// --- girth -----------------------------------------------------------------

struct GirthResult {
  std::optional<int> girth;   // nullopt: acyclic
  std::vector<Vertex> cycle;  // a shortest cycle, as a vertex sequence
};

/// Minimum cycle edge count by BFS from every vertex. Accepts multigraph
/// edge lists (a parallel pair counts as a 2-cycle, a loop as a 1-cycle).
GirthResult unweighted_girth(int n, std::span<const std::pair<Vertex, Vertex>> edges);

/// Girth of g with weights ignored.
std::optional<int> unweighted_girth(const WeightedGraph& g);

/// Explicit edge bound n^(1 + 1/floor((g-1)/2)) + n for a girth-g graph.
/// Reporting only. Throws std::invalid_argument for g < 3 or n < 1.
double girth_edge_bound(double n, int g);

}  // namespace lightspan
