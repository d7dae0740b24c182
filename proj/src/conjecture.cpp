#include <algorithm>
#include <stdexcept>

#include "lightspan/random.hpp"
#include "lightspan/wgirth.hpp"

namespace lightspan {

namespace {

constexpr int kMaxVertices = 9;
constexpr int kExhaustiveLimit = 7;
constexpr Weight kMaxSearchWeight = 32;

using Pair = std::pair<Vertex, Vertex>;

std::vector<Pair> all_pairs(int n) {
  std::vector<Pair> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

// Hop distance in a graph given as neighbor bitmasks; n when unreachable.
int hop_distance(const std::vector<unsigned>& nbr, Vertex s, Vertex t) {
  const int n = static_cast<int>(nbr.size());
  unsigned frontier = 1u << s;
  unsigned seen = frontier;
  for (int d = 0; d < n; ++d) {
    if (frontier & (1u << t)) return d;
    unsigned next = 0;
    for (Vertex x = 0; x < n; ++x)
      if (frontier & (1u << x)) next |= nbr[x];
    frontier = next & ~seen;
    seen |= next;
    if (!frontier) break;
  }
  return n;
}

// Adding (u, v) keeps girth >= target iff their current distance is >= target - 1.
bool can_add(const std::vector<unsigned>& nbr, Vertex u, Vertex v, int girth) {
  return hop_distance(nbr, u, v) >= girth - 1;
}

struct TopologySearch {
  int n;
  int girth;
  std::vector<Pair> pairs;
  std::vector<unsigned> nbr;
  std::vector<int> chosen;
  std::vector<int> best;
  std::uint64_t visited = 0;

  void run(std::size_t idx) {
    ++visited;
    if (chosen.size() > best.size()) best = chosen;
    if (idx == pairs.size()) return;
    if (chosen.size() + (pairs.size() - idx) <= best.size()) return;
    auto [u, v] = pairs[idx];
    if (can_add(nbr, u, v, girth)) {
      nbr[u] |= 1u << v;
      nbr[v] |= 1u << u;
      chosen.push_back(static_cast<int>(idx));
      run(idx + 1);
      chosen.pop_back();
      nbr[u] &= ~(1u << v);
      nbr[v] &= ~(1u << u);
    }
    run(idx + 1);
  }
};

WitnessGraph unit_graph(int n, const std::vector<Pair>& pairs, const std::vector<int>& chosen) {
  WitnessGraph w;
  w.n = n;
  for (int idx : chosen) w.edges.push_back({pairs[idx].first, pairs[idx].second, 1});
  return w;
}

// Weighted state: weight per vertex pair, 0 when absent.
struct WeightedState {
  std::vector<Weight> weight;

  WitnessGraph to_witness(int n, const std::vector<Pair>& pairs) const {
    WitnessGraph w;
    w.n = n;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (weight[i] > 0) w.edges.push_back({pairs[i].first, pairs[i].second, weight[i]});
    return w;
  }
};

struct Evaluation {
  bool feasible = false;
  Rational lightness;
};

Evaluation evaluate(const WitnessGraph& w, const Rational& target) {
  Evaluation ev;
  const WeightedGraph g = w.build();
  if (!g.connected()) return ev;
  const WeightedGirthResult girth = weighted_girth(g);
  if (!girth.acyclic() && *girth.value < target) return ev;
  ev.feasible = true;
  ev.lightness = lightness(g);
  return ev;
}

WeightedState random_tree(int n, const std::vector<Pair>& pairs, Rng& rng) {
  WeightedState state{std::vector<Weight>(pairs.size(), 0)};
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  rng.shuffle(perm);
  for (int i = 1; i < n; ++i) {
    Vertex u = perm[i];
    Vertex p = perm[rng.uniform_int(0, i - 1)];
    auto key = std::minmax(u, p);
    auto it = std::find(pairs.begin(), pairs.end(), Pair(key.first, key.second));
    state.weight[it - pairs.begin()] = rng.uniform_int(1, kMaxSearchWeight);
  }
  return state;
}

}  // namespace

ConjectureRecord conjecture_search(const ConjectureParams& params) {
  if (params.n < 2 || params.n > kMaxVertices)
    throw std::invalid_argument("conjecture_search supports 2 <= n <= 9");
  if (params.target <= 1) throw std::invalid_argument("weighted girth target must exceed 1");

  ConjectureRecord record;
  record.n = params.n;
  record.target = params.target;
  record.budget = params.budget;
  record.seed = params.seed;
  if (params.budget == 0) return record;
  record.empty = false;

  const int n = params.n;
  const int girth = std::max(3, ceil(params.target).convert_to<int>());
  const std::vector<Pair> pairs = all_pairs(n);
  Rng rng(params.seed);

  // Unit weights: the densest graph with girth >= ceil(target).
  std::vector<int> best_topology;
  if (n <= kExhaustiveLimit) {
    TopologySearch search{n, girth, pairs, std::vector<unsigned>(static_cast<std::size_t>(n), 0u), {}, {}};
    search.run(0);
    best_topology = search.best;
    record.candidates_evaluated += search.visited;
    record.unweighted_exhaustive = true;
  } else {
    for (std::uint64_t round = 0; round < params.budget; ++round) {
      std::vector<int> order(pairs.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
      rng.shuffle(order);
      std::vector<unsigned> nbr(static_cast<std::size_t>(n), 0u);
      std::vector<int> chosen;
      for (int idx : order) {
        auto [u, v] = pairs[idx];
        if (!can_add(nbr, u, v, girth)) continue;
        nbr[u] |= 1u << v;
        nbr[v] |= 1u << u;
        chosen.push_back(idx);
      }
      std::sort(chosen.begin(), chosen.end());
      ++record.candidates_evaluated;
      if (chosen.size() > best_topology.size()) best_topology = chosen;
    }
  }
  record.unweighted_witness = unit_graph(n, pairs, best_topology);
  record.unweighted_best = Rational(static_cast<long long>(best_topology.size()), n - 1);

  // Weighted hill climbing from the unit-weight optimum, with periodic
  // restarts from random spanning trees (always feasible).
  WeightedState start{std::vector<Weight>(pairs.size(), 0)};
  for (int idx : best_topology) start.weight[idx] = 1;
  WeightedState current = start;
  Evaluation current_eval = evaluate(current.to_witness(n, pairs), params.target);
  WeightedState best = current;
  Evaluation best_eval = current_eval;
  const std::uint64_t restart_every = std::max<std::uint64_t>(1, params.budget / 4);

  for (std::uint64_t iter = 1; iter <= params.budget; ++iter) {
    if (iter % restart_every == 0) {
      current = random_tree(n, pairs, rng);
      current_eval = evaluate(current.to_witness(n, pairs), params.target);
      ++record.candidates_evaluated;
      continue;
    }
    WeightedState candidate = current;
    const auto slot = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(pairs.size()) - 1));
    // Absent pair: add it. Present: drop it (1 in 3) or reweight it.
    const bool drop = rng.uniform_int(0, 2) == 0;
    if (candidate.weight[slot] != 0 && drop)
      candidate.weight[slot] = 0;
    else
      candidate.weight[slot] = rng.uniform_int(1, kMaxSearchWeight);
    const Evaluation ev = evaluate(candidate.to_witness(n, pairs), params.target);
    ++record.candidates_evaluated;
    if (!ev.feasible || ev.lightness < current_eval.lightness) continue;
    current = std::move(candidate);
    current_eval = ev;
    if (current_eval.lightness > best_eval.lightness) {
      best = current;
      best_eval = current_eval;
    }
  }
  record.weighted_witness = best.to_witness(n, pairs);
  record.weighted_best = best_eval.lightness;

  // Re-verify both witnesses from scratch.
  const WeightedGraph unit = record.unweighted_witness.build();
  const WeightedGraph heavy = record.weighted_witness.build();
  record.unweighted_girth = unweighted_girth(unit);
  const WeightedGirthResult heavy_girth = weighted_girth(heavy);
  record.weighted_girth = heavy_girth.value;
  record.verified = unit.connected() && heavy.connected() &&
                    (!record.unweighted_girth || *record.unweighted_girth >= girth) &&
                    lightness(unit) == record.unweighted_best &&
                    (heavy_girth.acyclic() || *heavy_girth.value >= params.target) &&
                    lightness(heavy) == record.weighted_best;
  return record;
}

namespace {

nlohmann::json witness_json(const WitnessGraph& w) {
  nlohmann::json edges = nlohmann::json::array();
  for (const EdgeSpec& e : w.edges) edges.push_back({e.u, e.v, format_weight(e.w, w.scale_digits)});
  return {{"n", w.n}, {"edges", edges}};
}

}  // namespace

nlohmann::json to_json(const ConjectureRecord& r) {
  nlohmann::json out = {
      {"n", r.n},
      {"target", to_string(r.target)},
      {"budget", r.budget},
      {"seed", r.seed},
      {"empty", r.empty},
  };
  if (r.empty) return out;
  out["unweighted"] = {
      {"exhaustive", r.unweighted_exhaustive},
      {"lightness", to_string(r.unweighted_best)},
      {"girth", r.unweighted_girth ? nlohmann::json(*r.unweighted_girth) : nlohmann::json(nullptr)},
      {"witness", witness_json(r.unweighted_witness)},
  };
  out["weighted"] = {
      {"lightness", to_string(r.weighted_best)},
      {"weighted_girth", r.weighted_girth ? nlohmann::json(to_string(*r.weighted_girth)) : nlohmann::json(nullptr)},
      {"witness", witness_json(r.weighted_witness)},
  };
  out["candidates_evaluated"] = r.candidates_evaluated;
  out["verified"] = r.verified;
  out["consistent_with_conjecture"] = r.consistent_with_conjecture();
  return out;
}

}  // namespace lightspan
