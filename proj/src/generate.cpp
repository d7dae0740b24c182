#include "lightspan/generate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "lightspan/random.hpp"

namespace lightspan {

namespace {

using WeightDraw = std::function<Weight(Rng&)>;

struct Builder {
  int n;
  std::vector<EdgeSpec> edges;
  std::unordered_set<std::uint64_t> present;

  static std::uint64_t key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
  }

  bool add(Vertex u, Vertex v, Weight w) {
    if (u == v || !present.insert(key(u, v)).second) return false;
    edges.push_back({u, v, w});
    return true;
  }

  // Joins components in random order, one random edge per link.
  void connect(Rng& rng, const WeightDraw& draw) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const EdgeSpec& e : edges) parent[find(e.u)] = find(e.v);
    std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) members[find(v)].push_back(v);
    std::vector<std::vector<Vertex>> comps;
    for (auto& m : members)
      if (!m.empty()) comps.push_back(std::move(m));
    if (comps.size() <= 1) return;
    rng.shuffle(comps);
    for (std::size_t c = 1; c < comps.size(); ++c) {
      const auto& prev = comps[rng.uniform_int(0, static_cast<std::int64_t>(c) - 1)];
      const auto& cur = comps[c];
      Vertex u = prev[rng.uniform_int(0, static_cast<std::int64_t>(prev.size()) - 1)];
      Vertex v = cur[rng.uniform_int(0, static_cast<std::int64_t>(cur.size()) - 1)];
      add(u, v, draw(rng));
    }
  }
};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

WeightedGraph gnp(const GeneratorSpec& spec, const WeightDraw& draw, int scale_digits) {
  require(spec.param >= 0.0 && spec.param <= 1.0, "gnp: param (edge probability) must lie in [0, 1]");
  Rng rng(spec.seed);
  Builder b{spec.n, {}, {}};
  for (Vertex u = 0; u < spec.n; ++u)
    for (Vertex v = u + 1; v < spec.n; ++v)
      if (rng.bernoulli(spec.param)) b.add(u, v, draw(rng));
  b.connect(rng, draw);
  return WeightedGraph(spec.n, b.edges, scale_digits);
}

Weight uniform_weight(Rng& rng) { return rng.uniform_int(1, 1000); }

// Exp(1) rounded to 3 decimals, at least 0.001.
Weight exponential_weight(Rng& rng) {
  const double x = -std::log(1.0 - rng.uniform01());
  return std::max<Weight>(1, static_cast<Weight>(std::llround(x * 1000.0)));
}

WeightedGraph complete_metric(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  const int n = spec.n;
  std::vector<Weight> d(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int i, int j) -> Weight& { return d[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) at(i, j) = at(j, i) = uniform_weight(rng);
  for (int via = 0; via < n; ++via)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) at(i, j) = std::min(at(i, j), at(i, via) + at(via, j));
  std::vector<EdgeSpec> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, at(i, j)});
  return WeightedGraph(n, edges, 0);
}

WeightedGraph grid(const GeneratorSpec& spec) {
  const int rows = spec.n;
  require(spec.param >= 0.0 && spec.param == std::floor(spec.param), "grid: param (columns) must be a whole number");
  const int cols = spec.param > 0 ? static_cast<int>(spec.param) : rows;
  require(static_cast<long long>(rows) * cols <= (1 << 24), "grid: too many vertices");
  std::vector<EdgeSpec> edges;
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), 1});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), 1});
    }
  }
  return WeightedGraph(rows * cols, edges, 0);
}

WeightedGraph path_with_chords(const GeneratorSpec& spec) {
  require(spec.param >= 0.0, "path-plus-random-chords: param (chords per vertex) must be >= 0");
  Rng rng(spec.seed);
  const int n = spec.n;
  Builder b{n, {}, {}};
  for (Vertex v = 0; v + 1 < n; ++v) b.add(v, v + 1, rng.uniform_int(1, 10));
  const long long possible = static_cast<long long>(n) * (n - 1) / 2 - (n - 1);
  const long long want = std::min<long long>(std::llround(spec.param * n), possible);
  long long added = 0;
  while (added < want) {
    Vertex u = static_cast<Vertex>(rng.uniform_int(0, n - 1));
    Vertex v = static_cast<Vertex>(rng.uniform_int(0, n - 1));
    if (u == v) continue;
    const Weight span = std::abs(u - v);
    if (b.add(u, v, rng.uniform_int(1, 10 * span))) ++added;
  }
  return WeightedGraph(n, b.edges, 0);
}

}  // namespace

const std::vector<std::string>& generator_families() {
  static const std::vector<std::string> families{"gnp-uniform-weights", "gnp-exponential-weights",
                                                 "complete-random-metric", "grid", "path-plus-random-chords"};
  return families;
}

WeightedGraph generate(const GeneratorSpec& spec) {
  require(spec.n >= 1, "generator: n must be >= 1");
  require(spec.n <= 1 << 20, "generator: n too large");
  if (spec.family == "gnp-uniform-weights") return gnp(spec, uniform_weight, 0);
  if (spec.family == "gnp-exponential-weights") return gnp(spec, exponential_weight, 3);
  if (spec.family == "complete-random-metric") {
    require(spec.n <= 4096, "complete-random-metric: n too large");
    return complete_metric(spec);
  }
  if (spec.family == "grid") return grid(spec);
  if (spec.family == "path-plus-random-chords") return path_with_chords(spec);
  throw std::invalid_argument("unknown generator family: " + spec.family);
}

}  // namespace lightspan
