#include "lightspan/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace lightspan {

namespace {

// Weight sums (and therefore every shortest-path length) stay below this.
constexpr Weight kMaxTotalWeight = Weight{1} << 60;
constexpr int kMaxScaleDigits = 12;

std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

int checked_vertex_count(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  return n;
}

Weight pow10(int digits) {
  Weight s = 1;
  for (int i = 0; i < digits; ++i) s *= 10;
  return s;
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

}  // namespace

std::string_view to_string(GraphErrc code) {
  switch (code) {
    case GraphErrc::malformed_line: return "malformed_line";
    case GraphErrc::non_positive_weight: return "non_positive_weight";
    case GraphErrc::self_loop: return "self_loop";
    case GraphErrc::duplicate_edge: return "duplicate_edge";
    case GraphErrc::vertex_out_of_range: return "vertex_out_of_range";
    case GraphErrc::edge_count_mismatch: return "edge_count_mismatch";
    case GraphErrc::disconnected: return "disconnected";
    case GraphErrc::weight_overflow: return "weight_overflow";
  }
  return "unknown";
}

GraphError::GraphError(GraphErrc code, int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      code_(code),
      line_(line) {}

WeightedGraph::WeightedGraph(int n, std::span<const EdgeSpec> edges, int scale_digits)
    : n_(n), scale_digits_(scale_digits), adj_(checked_vertex_count(n)) {
  if (scale_digits < 0 || scale_digits > kMaxScaleDigits)
    throw GraphError(GraphErrc::weight_overflow, 0, "unsupported weight scale");
  scale_ = pow10(scale_digits);
  edges_.reserve(edges.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (const EdgeSpec& e : edges) {
    const auto id = static_cast<EdgeId>(edges_.size());
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw GraphError(GraphErrc::vertex_out_of_range, 0,
                       "edge " + std::to_string(id) + " has a vertex outside [0, n)");
    if (e.u == e.v)
      throw GraphError(GraphErrc::self_loop, 0, "edge " + std::to_string(id) + " is a self-loop");
    if (e.w <= 0)
      throw GraphError(GraphErrc::non_positive_weight, 0,
                       "edge " + std::to_string(id) + " has non-positive weight");
    if (!seen.insert(pair_key(e.u, e.v)).second)
      throw GraphError(GraphErrc::duplicate_edge, 0, "edge " + std::to_string(id) + " is a duplicate");
    if (e.w > kMaxTotalWeight - total_)
      throw GraphError(GraphErrc::weight_overflow, 0, "total edge weight too large");
    total_ += e.w;
    edges_.push_back({e.u, e.v, e.w, id});
    adj_.add(edges_.back());
  }
}

bool WeightedGraph::connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (const Arc& a : adj_.arcs(x)) {
      if (!seen[a.to]) {
        seen[a.to] = 1;
        ++reached;
        stack.push_back(a.to);
      }
    }
  }
  return reached == n_;
}

std::optional<EdgeId> WeightedGraph::find_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
  for (const Arc& a : adj_.arcs(u))
    if (a.to == v) return a.id;
  return std::nullopt;
}

Subgraph WeightedGraph::subgraph(std::span<const EdgeId> ids) const {
  Subgraph out;
  out.original.assign(ids.begin(), ids.end());
  std::sort(out.original.begin(), out.original.end());
  out.original.erase(std::unique(out.original.begin(), out.original.end()), out.original.end());
  std::vector<EdgeSpec> specs;
  specs.reserve(out.original.size());
  for (EdgeId id : out.original) {
    const Edge& e = edge(id);
    specs.push_back({e.u, e.v, e.w});
  }
  out.graph = WeightedGraph(n_, specs, scale_digits_);
  return out;
}

WeightedGraph WeightedGraph::scaled(Weight factor) const {
  if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<EdgeSpec> specs;
  specs.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (e.w > kMaxTotalWeight / factor)
      throw GraphError(GraphErrc::weight_overflow, 0, "scaled weight too large");
    specs.push_back({e.u, e.v, e.w * factor});
  }
  return WeightedGraph(n_, specs, scale_digits_);
}

std::vector<EdgeId> edge_order(const WeightedGraph& g) {
  std::vector<EdgeId> order(static_cast<std::size_t>(g.num_edges()));
  std::iota(order.begin(), order.end(), 0);
  auto edges = g.edges();
  std::sort(order.begin(), order.end(),
            [&](EdgeId a, EdgeId b) { return edge_less(edges[a], edges[b]); });
  return order;
}

// --- text format -----------------------------------------------------------

namespace {

struct RawEdge {
  Vertex u;
  Vertex v;
  std::string whole;
  std::string frac;
  int line;
};

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
  int line_no = 0;
  int header_line = 0;
  long long n = -1;
  long long m = -1;
  std::vector<RawEdge> raw;
  int max_digits = 0;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    if (n < 0) {
      if (toks.size() != 2 || !parse_int(toks[0], n) || !parse_int(toks[1], m) || n < 1 || m < 0)
        throw GraphError(GraphErrc::malformed_line, line_no, "expected header \"n m\"");
      if (n > std::numeric_limits<int>::max() / 2)
        throw GraphError(GraphErrc::malformed_line, line_no, "vertex count too large");
      header_line = line_no;
      raw.reserve(static_cast<std::size_t>(std::min<long long>(m, 1 << 24)));
    } else {
      if (static_cast<long long>(raw.size()) == m)
        throw GraphError(GraphErrc::edge_count_mismatch, line_no,
                         "more edge lines than the header's m = " + std::to_string(m));
      long long u = 0;
      long long v = 0;
      if (toks.size() != 3 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
        throw GraphError(GraphErrc::malformed_line, line_no, "expected \"u v w\"");
      std::string_view wtok = toks[2];
      bool negative = false;
      if (wtok.front() == '-') {
        negative = true;
        wtok.remove_prefix(1);
      }
      std::string_view whole = wtok;
      std::string_view frac;
      if (auto dot = wtok.find('.'); dot != std::string_view::npos) {
        whole = wtok.substr(0, dot);
        frac = wtok.substr(dot + 1);
        if (!is_digits(frac))
          throw GraphError(GraphErrc::malformed_line, line_no, "bad weight \"" + std::string(toks[2]) + "\"");
      }
      if (!is_digits(whole))
        throw GraphError(GraphErrc::malformed_line, line_no, "bad weight \"" + std::string(toks[2]) + "\"");
      bool zero = std::all_of(whole.begin(), whole.end(), [](char c) { return c == '0'; }) &&
                  std::all_of(frac.begin(), frac.end(), [](char c) { return c == '0'; });
      if (negative || zero)
        throw GraphError(GraphErrc::non_positive_weight, line_no, "weight must be positive");
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw GraphError(GraphErrc::vertex_out_of_range, line_no, "vertex id outside [0, n)");
      if (u == v) throw GraphError(GraphErrc::self_loop, line_no, "self-loop");
      if (static_cast<int>(frac.size()) > kMaxScaleDigits)
        throw GraphError(GraphErrc::weight_overflow, line_no, "too many decimal digits");
      max_digits = std::max(max_digits, static_cast<int>(frac.size()));
      raw.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), std::string(whole),
                     std::string(frac), line_no});
    }
    if (end == text.size()) break;
  }

  if (n < 0) throw GraphError(GraphErrc::malformed_line, line_no, "missing header");
  if (static_cast<long long>(raw.size()) != m)
    throw GraphError(GraphErrc::edge_count_mismatch, line_no,
                     "header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(raw.size()));

  std::vector<EdgeSpec> specs;
  specs.reserve(raw.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(raw.size() * 2);
  const BigInt limit(kMaxTotalWeight);
  for (const RawEdge& r : raw) {
    if (!seen.insert(pair_key(r.u, r.v)).second)
      throw GraphError(GraphErrc::duplicate_edge, r.line, "duplicate edge");
    std::string digits = r.whole + r.frac + std::string(static_cast<std::size_t>(max_digits) - r.frac.size(), '0');
    // Leading zeros would select octal in the BigInt string constructor.
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    const BigInt scaled(digits);
    if (scaled > limit) throw GraphError(GraphErrc::weight_overflow, r.line, "weight too large");
    specs.push_back({r.u, r.v, scaled.convert_to<Weight>()});
  }

  WeightedGraph g;
  try {
    g = WeightedGraph(static_cast<int>(n), specs, max_digits);
  } catch (const GraphError& e) {
    throw GraphError(e.code(), header_line, e.what());
  }
  if (!g.connected()) throw GraphError(GraphErrc::disconnected, header_line, "graph is not connected");
  return g;
}

std::string format_weight(Weight w, int scale_digits) {
  std::string digits = std::to_string(w);
  if (scale_digits == 0) return digits;
  const auto sd = static_cast<std::size_t>(scale_digits);
  if (digits.size() <= sd) digits.insert(0, sd + 1 - digits.size(), '0');
  digits.insert(digits.size() - sd, 1, '.');
  return digits;
}

std::string serialize_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges())
    out << e.u << ' ' << e.v << ' ' << format_weight(e.w, g.scale_digits()) << '\n';
  return out.str();
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void write_graph_file(const std::string& path, const WeightedGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write " + path);
  out << serialize_graph(g);
  if (!out) throw std::ios_base::failure("write failed: " + path);
}

// --- minimum spanning tree -------------------------------------------------

Tree mst(const WeightedGraph& g) {
  const int n = g.num_vertices();
  Tree tree;
  DisjointSets sets(n);
  for (EdgeId id : edge_order(g)) {
    const Edge& e = g.edge(id);
    if (sets.unite(e.u, e.v)) {
      tree.edges.push_back(id);
      tree.weight += e.w;
    }
  }
  if (n > 0 && static_cast<int>(tree.edges.size()) != n - 1)
    throw GraphError(GraphErrc::disconnected, 0, "graph is not connected");
  std::sort(tree.edges.begin(), tree.edges.end());

  tree.parent.assign(static_cast<std::size_t>(n), -1);
  tree.parent_edge.assign(static_cast<std::size_t>(n), -1);
  if (n == 0) return tree;
  Adjacency adj(n);
  for (EdgeId id : tree.edges) adj.add(g.edge(id));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{tree.root};
  seen[tree.root] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (const Arc& a : adj.arcs(x)) {
      if (seen[a.to]) continue;
      seen[a.to] = 1;
      tree.parent[a.to] = x;
      tree.parent_edge[a.to] = a.id;
      stack.push_back(a.to);
    }
  }
  return tree;
}

// --- shortest paths --------------------------------------------------------

BoundedDijkstra::BoundedDijkstra(int n)
    : dist_(static_cast<std::size_t>(n), kInfinity),
      pred_edge_(static_cast<std::size_t>(n), -1),
      pred_vertex_(static_cast<std::size_t>(n), -1) {}

void BoundedDijkstra::reset() {
  for (Vertex x : touched_) {
    dist_[x] = kInfinity;
    pred_edge_[x] = -1;
    pred_vertex_[x] = -1;
  }
  touched_.clear();
}

std::optional<Weight> BoundedDijkstra::distance(const Adjacency& adj, Vertex s, Vertex t, Weight cap) {
  const int n = adj.num_vertices();
  if (s < 0 || s >= n || t < 0 || t >= n) throw std::out_of_range("vertex out of range");
  if (static_cast<int>(dist_.size()) < n) {
    dist_.resize(static_cast<std::size_t>(n), kInfinity);
    pred_edge_.resize(static_cast<std::size_t>(n), -1);
    pred_vertex_.resize(static_cast<std::size_t>(n), -1);
  }
  reset();
  last_source_ = s;
  last_target_ = -1;
  if (s == t) {
    last_target_ = t;
    return Weight{0};
  }

  using Item = std::pair<Weight, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist_[s] = 0;
  touched_.push_back(s);
  heap.push({0, s});
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d != dist_[x]) continue;
    if (x == t) {
      last_target_ = t;
      return d;
    }
    for (const Arc& a : adj.arcs(x)) {
      const Weight nd = d + a.w;
      if (nd > cap || nd >= dist_[a.to]) continue;
      if (dist_[a.to] == kInfinity) touched_.push_back(a.to);
      dist_[a.to] = nd;
      pred_edge_[a.to] = a.id;
      pred_vertex_[a.to] = x;
      heap.push({nd, a.to});
    }
  }
  return std::nullopt;
}

std::vector<EdgeId> BoundedDijkstra::last_path() const {
  std::vector<EdgeId> path;
  if (last_target_ < 0) return path;
  for (Vertex x = last_target_; x != last_source_; x = pred_vertex_[x]) path.push_back(pred_edge_[x]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<Weight> shortest_path_bounded(const Adjacency& adj, Vertex u, Vertex v, Weight cap) {
  if (cap <= 0) throw std::invalid_argument("cap must be positive");
  BoundedDijkstra search(adj.num_vertices());
  return search.distance(adj, u, v, cap);
}

std::optional<Weight> shortest_path_bounded(const WeightedGraph& g, Vertex u, Vertex v, Weight cap) {
  return shortest_path_bounded(g.adjacency(), u, v, cap);
}

std::vector<Weight> distances_from(const Adjacency& adj, Vertex s) {
  const int n = adj.num_vertices();
  if (s < 0 || s >= n) throw std::out_of_range("vertex out of range");
  std::vector<Weight> dist(static_cast<std::size_t>(n), kInfinity);
  using Item = std::pair<Weight, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[s] = 0;
  heap.push({0, s});
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d != dist[x]) continue;
    for (const Arc& a : adj.arcs(x)) {
      const Weight nd = d + a.w;
      if (nd < dist[a.to]) {
        dist[a.to] = nd;
        heap.push({nd, a.to});
      }
    }
  }
  return dist;
}

}  // namespace lightspan
