#include "spanner/distance.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>

namespace spanner {

namespace {

bool is_excluded(std::span<const EdgeId> excluded, EdgeId id) {
  return std::find(excluded.begin(), excluded.end(), id) != excluded.end();
}

void check_cutoff(int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
}

// Truncated BFS from `source`. Stops early once `target` is settled (when
// given). Unvisited entries stay at kBeyondCutoff.
std::vector<int> bfs(const SubgraphView& g, Vertex source, int cutoff,
                     std::span<const EdgeId> excluded, std::optional<Vertex> target) {
  const Multigraph& host = g.host();
  std::vector<int> dist(host.num_vertices(), kBeyondCutoff);
  std::vector<Vertex> frontier{source};
  std::vector<Vertex> next;
  dist[source] = 0;
  if (target && *target == source) return dist;
  for (int level = 0; level < cutoff && !frontier.empty(); ++level) {
    next.clear();
    for (Vertex a : frontier) {
      for (const Incidence& inc : host.incident(a)) {
        if (dist[inc.neighbor] != kBeyondCutoff) continue;
        if (!g.contains(inc.edge) || is_excluded(excluded, inc.edge)) continue;
        dist[inc.neighbor] = level + 1;
        if (target && inc.neighbor == *target) return dist;
        next.push_back(inc.neighbor);
      }
    }
    std::swap(frontier, next);
  }
  return dist;
}

}  // namespace

int hop_distance(const SubgraphView& g, Vertex x, Vertex y, int cutoff,
                 std::span<const EdgeId> excluded) {
  g.host().check_vertex(x);
  g.host().check_vertex(y);
  check_cutoff(cutoff);
  return bfs(g, x, cutoff, excluded, y)[y];
}

std::vector<int> hop_distances(const SubgraphView& g, Vertex source, int cutoff,
                               std::span<const EdgeId> excluded) {
  g.host().check_vertex(source);
  check_cutoff(cutoff);
  return bfs(g, source, cutoff, excluded, std::nullopt);
}

std::vector<Vertex> hop_ball(const SubgraphView& g, Vertex v, int radius) {
  const auto dist = hop_distances(g, v, radius);
  std::vector<Vertex> ball;
  for (Vertex u = 0; u < dist.size(); ++u) {
    if (dist[u] != kBeyondCutoff) ball.push_back(u);
  }
  return ball;
}

std::vector<std::size_t> ball_profile(const SubgraphView& g, Vertex v, int radius) {
  const auto dist = hop_distances(g, v, radius);
  std::vector<std::size_t> sizes(static_cast<std::size_t>(radius) + 1, 0);
  for (int d : dist) {
    if (d != kBeyondCutoff) ++sizes[static_cast<std::size_t>(d)];
  }
  for (std::size_t r = 1; r < sizes.size(); ++r) sizes[r] += sizes[r - 1];
  return sizes;
}

std::vector<double> weighted_distances(const SubgraphView& g, Vertex source, double limit) {
  const Multigraph& host = g.host();
  host.check_vertex(source);
  std::vector<double> dist(host.num_vertices(), kInfiniteWeight);
  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    const auto [d, a] = queue.top();
    queue.pop();
    if (d > dist[a]) continue;
    for (const Incidence& inc : host.incident(a)) {
      if (!g.contains(inc.edge)) continue;
      const double candidate = d + host.edge(inc.edge).weight;
      if (candidate > limit) continue;
      if (candidate < dist[inc.neighbor]) {
        dist[inc.neighbor] = candidate;
        queue.emplace(candidate, inc.neighbor);
      }
    }
  }
  return dist;
}

double weighted_distance(const SubgraphView& g, Vertex x, Vertex y, double limit) {
  const Multigraph& host = g.host();
  host.check_vertex(x);
  host.check_vertex(y);
  std::vector<double> dist(host.num_vertices(), kInfiniteWeight);
  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[x] = 0.0;
  queue.emplace(0.0, x);
  while (!queue.empty()) {
    const auto [d, a] = queue.top();
    queue.pop();
    if (d > dist[a]) continue;
    if (a == y) return d;
    for (const Incidence& inc : host.incident(a)) {
      if (!g.contains(inc.edge)) continue;
      const double candidate = d + host.edge(inc.edge).weight;
      if (candidate > limit) continue;
      if (candidate < dist[inc.neighbor]) {
        dist[inc.neighbor] = candidate;
        queue.emplace(candidate, inc.neighbor);
      }
    }
  }
  return kInfiniteWeight;
}

std::vector<Vertex> weighted_ball(const SubgraphView& g, Vertex v, double radius) {
  if (radius < 0.0) throw std::invalid_argument("radius must be nonnegative");
  const auto dist = weighted_distances(g, v, radius);
  std::vector<Vertex> ball;
  for (Vertex u = 0; u < dist.size(); ++u) {
    if (dist[u] <= radius) ball.push_back(u);
  }
  return ball;
}

int girth(const SubgraphView& g) {
  const Multigraph& host = g.host();
  int best = kBeyondCutoff;
  for (const Edge& e : host.edges()) {
    if (!g.contains(e.id)) continue;
    if (best == 2) break;
    // A cycle through e shorter than `best` needs a detour of at most best - 2.
    const int cutoff = best == kBeyondCutoff ? static_cast<int>(host.num_vertices()) : best - 2;
    const EdgeId skip[] = {e.id};
    const int detour = bfs(g, e.u, cutoff, skip, e.v)[e.v];
    if (detour != kBeyondCutoff) best = std::min(best, detour + 1);
  }
  return best;
}

std::optional<PathSeq> shortest_path(const SubgraphView& g, Vertex x, Vertex y, int cutoff,
                                     std::span<const EdgeId> excluded) {
  const Multigraph& host = g.host();
  host.check_vertex(x);
  host.check_vertex(y);
  check_cutoff(cutoff);
  const auto to_y = bfs(g, y, cutoff, excluded, std::nullopt);
  if (to_y[x] == kBeyondCutoff) return std::nullopt;
  PathSeq path;
  path.vertices.push_back(x);
  Vertex at = x;
  while (at != y) {
    const int want = to_y[at] - 1;
    for (const Incidence& inc : host.incident(at)) {
      if (to_y[inc.neighbor] != want) continue;
      if (!g.contains(inc.edge) || is_excluded(excluded, inc.edge)) continue;
      path.edges.push_back(inc.edge);
      path.vertices.push_back(inc.neighbor);
      at = inc.neighbor;
      break;
    }
  }
  return path;
}

}  // namespace spanner
