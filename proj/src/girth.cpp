#include <algorithm>
#include <cmath>
#include <queue>

#include "lightspan/graph.hpp"

namespace lightspan {

namespace {

struct Incidence {
  Vertex to;
  int edge;
};

struct Bfs {
  std::vector<int> dist;
  std::vector<Vertex> parent;
  std::vector<int> parent_edge;
};

}  // namespace

GirthResult unweighted_girth(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  GirthResult result;
  std::vector<std::vector<Incidence>> inc(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u == v) {
      result.girth = 1;
      result.cycle = {u};
      return result;
    }
    inc[u].push_back({v, static_cast<int>(i)});
    inc[v].push_back({u, static_cast<int>(i)});
  }

  Bfs bfs{std::vector<int>(static_cast<std::size_t>(n)), std::vector<Vertex>(static_cast<std::size_t>(n)),
          std::vector<int>(static_cast<std::size_t>(n))};
  int best = std::numeric_limits<int>::max();
  Vertex best_root = -1;
  Vertex best_x = -1;
  Vertex best_y = -1;

  // Runs a BFS from root. With record set, candidate cycles are scanned
  // and the search stops once no shorter cycle can close.
  auto run = [&](Vertex root, bool record) {
    std::fill(bfs.dist.begin(), bfs.dist.end(), -1);
    std::queue<Vertex> queue;
    bfs.dist[root] = 0;
    bfs.parent[root] = -1;
    bfs.parent_edge[root] = -1;
    queue.push(root);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop();
      if (record && 2 * bfs.dist[x] + 1 >= best) break;
      for (const Incidence& a : inc[x]) {
        if (a.edge == bfs.parent_edge[x]) continue;
        if (bfs.dist[a.to] < 0) {
          bfs.dist[a.to] = bfs.dist[x] + 1;
          bfs.parent[a.to] = x;
          bfs.parent_edge[a.to] = a.edge;
          queue.push(a.to);
        } else if (record) {
          int len = bfs.dist[x] + bfs.dist[a.to] + 1;
          if (len < best) {
            best = len;
            best_root = root;
            best_x = x;
            best_y = a.to;
          }
        }
      }
    }
  };

  for (Vertex r = 0; r < n; ++r) run(r, true);
  if (best_root < 0) return result;

  // At the minimum the two tree paths meet only at the root, so the
  // closed walk root..x, y..root is a simple cycle.
  run(best_root, false);
  std::vector<Vertex> left;
  for (Vertex x = best_x; x != -1; x = bfs.parent[x]) left.push_back(x);
  std::reverse(left.begin(), left.end());
  std::vector<Vertex> right;
  for (Vertex y = best_y; y != best_root; y = bfs.parent[y]) right.push_back(y);
  result.girth = best;
  result.cycle = std::move(left);
  result.cycle.insert(result.cycle.end(), right.begin(), right.end());
  return result;
}

std::optional<int> unweighted_girth(const WeightedGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(static_cast<std::size_t>(g.num_edges()));
  for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
  return unweighted_girth(g.num_vertices(), pairs).girth;
}

double girth_edge_bound(double n, int g) {
  if (g < 3) throw std::invalid_argument("girth_edge_bound requires g >= 3");
  if (n < 1) throw std::invalid_argument("girth_edge_bound requires n >= 1");
  const int half = (g - 1) / 2;
  return std::pow(n, 1.0 + 1.0 / half) + n;
}

}  // namespace lightspan
