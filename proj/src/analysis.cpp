#include "lightspan/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lightspan {

namespace {

Rational abs_diff(const Rational& x, const Rational& y) { return x >= y ? Rational(x - y) : Rational(y - x); }

Rational int_pow(int base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return Rational(r);
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

// --- traversal path --------------------------------------------------------

TraversalPath build_path(const WeightedGraph& g, const Tree& z) {
  const int n = g.num_vertices();
  TraversalPath path;
  path.tree_weight = g.to_rational(z.weight);
  path.pos.assign(static_cast<std::size_t>(n), Rational(0));
  if (n == 0) return path;

  std::vector<std::vector<Vertex>> children(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    if (z.parent[v] >= 0) children[z.parent[v]].push_back(v);
  for (auto& c : children) std::sort(c.begin(), c.end());

  // Root distance in scaled units, filled in preorder.
  std::vector<Weight> depth(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{z.root};
  Weight offset = 0;
  Vertex prev = -1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (z.parent[v] >= 0) depth[v] = depth[z.parent[v]] + g.edge(z.parent_edge[v]).w;
    if (prev >= 0) {
      // In preorder the previous vertex lies in the subtree of v's parent,
      // so their tree path meets at that parent.
      const Vertex lca = z.parent[v];
      offset += depth[prev] + depth[v] - 2 * depth[lca];
    }
    path.order.push_back(v);
    path.pos[v] = g.to_rational(offset);
    prev = v;
    for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) stack.push_back(*it);
  }
  path.length = g.to_rational(offset);
  return path;
}

// --- scales ----------------------------------------------------------------

ScaleDecomposition scale_decompose(const WeightedGraph& g, const SpannerResult& h, const Tree& z,
                                   const TraversalPath& path, int k) {
  if (k < 2) throw std::invalid_argument("scale decomposition requires k >= 2");
  ScaleDecomposition out;
  const int n = g.num_vertices();
  if (path.length == 0 || n < 2) return out;

  long long reach = 1;
  while (reach < n) {
    reach *= k;
    ++out.levels;
  }
  out.unit = path.length / n;
  for (int i = 1; i <= out.levels; ++i) {
    ScaleClass cls;
    cls.index = i;
    cls.a = int_pow(k, i - 1) * out.unit;
    out.classes.push_back(std::move(cls));
  }

  std::vector<char> in_tree(static_cast<std::size_t>(g.num_edges()), 0);
  for (EdgeId id : z.edges) in_tree[id] = 1;

  std::vector<EdgeId> members;
  for (EdgeId id : h.edges)
    if (!in_tree.at(static_cast<std::size_t>(id))) members.push_back(id);
  std::sort(members.begin(), members.end(),
            [&](EdgeId x, EdgeId y) { return edge_less(g.edge(x), g.edge(y)); });

  for (EdgeId id : members) {
    const Rational w = g.weight(id);
    if (w <= out.unit) {
      out.light.push_back(id);
      continue;
    }
    bool placed = false;
    for (ScaleClass& cls : out.classes) {
      if (w > cls.a && w <= k * cls.a) {
        cls.edges.push_back(id);
        cls.weight += w;
        placed = true;
        break;
      }
    }
    if (!placed) out.rejected.push_back(id);
  }
  return out;
}

// --- matching graph K -------------------------------------------------------

long MatchGraph::interval_of(const Rational& position) const {
  const BigInt j = ceil(position / interval_length);
  if (j < 1) return 1;
  if (j > s) return s;
  return j.convert_to<long>();
}

MatchGraph build_K(const WeightedGraph& g, const ScaleClass& cls, const TraversalPath& path, int k,
                   const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  MatchGraph K;
  K.scale_index = cls.index;
  K.a = cls.a;
  if (cls.a <= 0 || path.length == 0) return K;
  K.s = ceil(8 * path.length / (eps * cls.a)).convert_to<long>();
  K.interval_length = path.length / K.s;

  for (EdgeId id : cls.edges) {
    const Edge& e = g.edge(id);
    const Rational w = g.weight(id);
    const int b = floor(w / cls.a).convert_to<int>();
    const long h = K.interval_of(path.pos[e.u]);
    const long j = K.interval_of(path.pos[e.v]);
    const long h_lo = std::max(1L, h - b);
    const long h_hi = std::min(K.s, h + b);
    const long j_lo = std::max(1L, j - b);
    const long j_hi = std::min(K.s, j + b);

    // Representatives shared by both neighborhoods are left out; the rest
    // are paired in ascending index order.
    std::vector<long> left;
    std::vector<long> right;
    for (long x = h_lo; x <= h_hi; ++x)
      if (x < j_lo || x > j_hi) left.push_back(x);
    for (long x = j_lo; x <= j_hi; ++x)
      if (x < h_lo || x > h_hi) right.push_back(x);
    const std::size_t count = std::min(left.size(), right.size());
    for (std::size_t t = 0; t < count; ++t) K.edges.push_back({left[t], right[t], id, e.u, e.v, b});
    if (count < static_cast<std::size_t>(b) + 1) K.short_sources.push_back(id);
  }
  return K;
}

Obs2Check check_obs2(const MatchGraph& kgraph, const ScaleClass& cls) {
  Obs2Check check;
  check.lhs = Rational(static_cast<long long>(kgraph.edges.size())) * kgraph.a;
  check.rhs = cls.weight;
  std::map<EdgeId, long> per_source;
  for (const MatchEdge& f : kgraph.edges) ++per_source[f.source];
  for (const MatchEdge& f : kgraph.edges)
    if (per_source[f.source] < f.b + 1) check.per_source_ok = false;
  for (EdgeId id : cls.edges)
    if (!per_source.count(id)) check.per_source_ok = false;
  return check;
}

TourCheck check_tours(const WeightedGraph& g, const MatchGraph& kgraph, const TraversalPath& path,
                      const Rational& eps) {
  TourCheck check;
  const Rational slack = 1 + eps / 2;
  for (std::size_t idx = 0; idx < kgraph.edges.size(); ++idx) {
    const MatchEdge& f = kgraph.edges[idx];
    const Rational w = g.weight(f.source);
    const Rational length = abs_diff(kgraph.representative(f.q), path.pos[f.u]) + w +
                            abs_diff(path.pos[f.v], kgraph.representative(f.q2));
    const Rational ratio = length / w;
    if (!check.worst || ratio > check.max_ratio) {
      check.max_ratio = ratio;
      check.worst = idx;
    }
    if (length > slack * w) check.pass = false;
  }
  return check;
}

KStructureCheck check_K_simple_and_girth(const MatchGraph& kgraph, int k) {
  KStructureCheck check;
  const auto& F = kgraph.edges;

  std::map<std::pair<long, long>, std::size_t> seen;
  for (std::size_t idx = 0; idx < F.size(); ++idx) {
    auto key = std::minmax(F[idx].q, F[idx].q2);
    auto [it, fresh] = seen.emplace(key, idx);
    if (!fresh && check.simple) {
      check.simple = false;
      check.parallel = std::make_pair(it->second, idx);
    }
  }

  std::map<EdgeId, std::vector<long>> used;
  for (const MatchEdge& f : F) {
    auto& reps = used[f.source];
    reps.push_back(f.q);
    reps.push_back(f.q2);
  }
  for (auto& [source, reps] : used) {
    std::sort(reps.begin(), reps.end());
    if (std::adjacent_find(reps.begin(), reps.end()) != reps.end()) check.matching = false;
  }

  // Girth over the representatives that actually carry edges.
  std::map<long, int> compact;
  for (const MatchEdge& f : F) {
    compact.emplace(f.q, 0);
    compact.emplace(f.q2, 0);
  }
  std::vector<long> original;
  for (auto& [rep, index] : compact) {
    index = static_cast<int>(original.size());
    original.push_back(rep);
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(F.size());
  for (const MatchEdge& f : F) pairs.emplace_back(compact[f.q], compact[f.q2]);
  GirthResult girth = unweighted_girth(static_cast<int>(original.size()), pairs);
  check.girth = girth.girth;
  for (Vertex x : girth.cycle) check.cycle.push_back(original[x]);
  check.girth_ok = !girth.girth || *girth.girth >= 2 * k + 1;
  return check;
}

// --- report ----------------------------------------------------------------

std::vector<ScaleRow> per_scale_weight_report(const WeightedGraph& g, const TraversalPath& path,
                                              const ScaleDecomposition& decomposition,
                                              const std::vector<MatchGraph>& kgraphs, int k,
                                              const Rational& eps) {
  if (kgraphs.size() != decomposition.classes.size())
    throw std::invalid_argument("one matching graph per scale class expected");
  std::vector<ScaleRow> rows;
  const double n = g.num_vertices();
  const double L = to_double(path.length);
  const double e = to_double(eps);
  for (std::size_t c = 0; c < kgraphs.size(); ++c) {
    const ScaleClass& cls = decomposition.classes[c];
    const MatchGraph& K = kgraphs[c];
    ScaleRow row;
    row.i = cls.index;
    row.a = cls.a;
    row.num_edges = static_cast<int>(cls.edges.size());
    row.weight = cls.weight;
    row.s = K.s;
    row.num_f = static_cast<long>(K.edges.size());
    row.f_times_a = Rational(row.num_f) * cls.a;
    row.girth_bound_times_a = K.s > 0 ? girth_edge_bound(static_cast<double>(K.s), 2 * k + 1) * to_double(cls.a) : 0.0;
    row.thm2_ref = L * std::pow(n / std::pow(static_cast<double>(k), cls.index - 1), 1.0 / k) /
                   std::pow(e, 1.0 + 1.0 / k);

    const Obs2Check obs2 = check_obs2(K, cls);
    const TourCheck tours = check_tours(g, K, path, eps);
    const KStructureCheck structure = check_K_simple_and_girth(K, k);
    row.obs2_ok = obs2.lhs >= obs2.rhs;
    row.per_source_ok = obs2.per_source_ok;
    row.tours_ok = tours.pass;
    row.max_tour_ratio = tours.max_ratio;
    row.simple_ok = structure.simple && structure.matching;
    row.girth_ok = structure.girth_ok;
    row.k_girth = structure.girth;
    row.overlap_flags = static_cast<int>(K.short_sources.size());
    rows.push_back(std::move(row));
  }
  return rows;
}

bool ScaleAnalysis::all_pass() const {
  return path_ok() && decomposition.rejected.empty() &&
         std::all_of(rows.begin(), rows.end(), [](const ScaleRow& r) { return r.pass(); });
}

int ScaleAnalysis::populated_scales() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const ScaleRow& r) { return r.num_edges > 0; }));
}

int ScaleAnalysis::overlap_flags() const {
  int total = 0;
  for (const ScaleRow& r : rows) total += r.overlap_flags;
  return total;
}

ScaleAnalysis analyze_spanner(const WeightedGraph& g, const SpannerResult& h, int k, const Rational& eps) {
  ScaleAnalysis out;
  out.z = mst(g);
  out.path = build_path(g, out.z);
  out.decomposition = scale_decompose(g, h, out.z, out.path, k);
  for (const ScaleClass& cls : out.decomposition.classes)
    out.kgraphs.push_back(build_K(g, cls, out.path, k, eps));
  out.rows = per_scale_weight_report(g, out.path, out.decomposition, out.kgraphs, k, eps);
  return out;
}

std::string scale_table_csv(const std::vector<ScaleRow>& rows) {
  std::ostringstream out;
  out << "i,a,edges,weight,s,f_edges,f_times_a,girth_bound_times_a,thm2_ref,max_tour_ratio,k_girth,"
         "obs2_ok,per_source_ok,tours_ok,simple_ok,girth_ok,overlap_flags\n";
  for (const ScaleRow& r : rows) {
    out << r.i << ',' << to_string(r.a) << ',' << r.num_edges << ',' << to_string(r.weight) << ',' << r.s << ','
        << r.num_f << ',' << to_string(r.f_times_a) << ',' << format_double(r.girth_bound_times_a) << ','
        << format_double(r.thm2_ref) << ',' << to_string(r.max_tour_ratio) << ','
        << (r.k_girth ? std::to_string(*r.k_girth) : std::string("inf")) << ',' << r.obs2_ok << ','
        << r.per_source_ok << ',' << r.tours_ok << ',' << r.simple_ok << ',' << r.girth_ok << ','
        << r.overlap_flags << '\n';
  }
  return out.str();
}

nlohmann::json scale_table_json(const std::vector<ScaleRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const ScaleRow& r : rows) {
    out.push_back({
        {"i", r.i},
        {"a", to_string(r.a)},
        {"edges", r.num_edges},
        {"weight", to_string(r.weight)},
        {"s", r.s},
        {"f_edges", r.num_f},
        {"f_times_a", to_string(r.f_times_a)},
        {"girth_bound_times_a", r.girth_bound_times_a},
        {"thm2_ref", r.thm2_ref},
        {"max_tour_ratio", to_string(r.max_tour_ratio)},
        {"k_girth", r.k_girth ? nlohmann::json(*r.k_girth) : nlohmann::json(nullptr)},
        {"obs2_ok", r.obs2_ok},
        {"per_source_ok", r.per_source_ok},
        {"tours_ok", r.tours_ok},
        {"simple_ok", r.simple_ok},
        {"girth_ok", r.girth_ok},
        {"overlap_flags", r.overlap_flags},
    });
  }
  return out;
}

}  // namespace lightspan
