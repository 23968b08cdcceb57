#include "spanner/greedy_spanners.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "spanner/clustering.hpp"
#include "spanner/distance.hpp"
#include "spanner/exact_threshold.hpp"

namespace spanner {

bool SpannerResult::contains(EdgeId id) const {
  return std::binary_search(edges.begin(), edges.end(), id);
}

SubgraphView SpannerResult::view(const Multigraph& host) const { return SubgraphView(host, edges); }

void merge_edges(std::vector<EdgeId>& into, std::span<const EdgeId> extra) {
  into.insert(into.end(), extra.begin(), extra.end());
  std::sort(into.begin(), into.end());
  into.erase(std::unique(into.begin(), into.end()), into.end());
}

namespace {

void require_unweighted(const Multigraph& g) {
  if (g.weighted()) throw std::invalid_argument("construction expects an unweighted graph");
}

// For a 2-path added by the greedy with r = 2k, one half-pair must be more
// than k apart in the pre-addition spanner.
void check_distant_pair(const SubgraphView& h, const PathSeq& p, int r) {
  if (p.hop_length() != 2 || r % 2 != 0) return;
  const int k = r / 2;
  const Vertex x = p.vertices[0];
  const Vertex m = p.vertices[1];
  const Vertex y = p.vertices[2];
  if (hop_distance(h, x, m, k) <= k && hop_distance(h, m, y, k) <= k) {
    throw std::logic_error("added 2-path has no distant half-pair");
  }
}

void add_path(SubgraphView& h, SpannerResult& result, PathSeq path) {
  for (EdgeId e : path.edges) h.insert(e);
  result.added_paths.push_back(std::move(path));
}

}  // namespace

SpannerResult greedy_dr_spanner(const Multigraph& g, int d, int r) {
  require_unweighted(g);
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  if (r < d) throw std::invalid_argument("r must be at least d");
  const SubgraphView whole = SubgraphView::full(g);
  SubgraphView h = SubgraphView::empty(g);
  SpannerResult result;
  result.algorithm = "greedy-dr";
  result.params = SpannerParams{.n = g.num_vertices(), .k = 1, .d = d, .r = r};
  const auto n = static_cast<Vertex>(g.num_vertices());
  for (Vertex x = 0; x < n; ++x) {
    const auto from_x = hop_distances(whole, x, d);
    for (Vertex y = x + 1; y < n; ++y) {
      if (from_x[y] != d) continue;
      if (hop_distance(h, x, y, r) <= r) continue;
      auto path = shortest_path(whole, x, y, d);
      check_distant_pair(h, *path, r);
      add_path(h, result, std::move(*path));
    }
  }
  result.edges = h.edge_ids();
  return result;
}

SpannerResult greedy_path_collection_spanner(const Multigraph& host, const PathCollection& coll,
                                             int r) {
  if (coll.n != host.num_vertices()) {
    throw std::invalid_argument("path collection vertex count does not match host");
  }
  if (!coll.paths.empty()) {
    const std::size_t len = coll.paths.front().hop_length();
    for (const PathSeq& p : coll.paths) {
      if (p.hop_length() != len) {
        throw std::invalid_argument("path collection mixes lengths " + std::to_string(len) +
                                    " and " + std::to_string(p.hop_length()));
      }
      validate_path(host, p);
    }
  }
  SubgraphView h = SubgraphView::empty(host);
  SpannerResult result;
  result.algorithm = "path-collection";
  result.params = SpannerParams{.n = host.num_vertices(),
                                .k = 1,
                                .d = coll.paths.empty() ? 0 : static_cast<int>(coll.paths[0].hop_length()),
                                .r = r};
  for (const PathSeq& p : coll.paths) {
    if (hop_distance(h, p.front(), p.back(), r) <= r) continue;
    check_distant_pair(h, p, r);
    add_path(h, result, p);
  }
  result.edges = h.edge_ids();
  return result;
}

SpannerResult parallel_greedy_spanner(const Multigraph& g, int k,
                                      std::span<const std::vector<EdgeId>> matchings) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::vector<char> used(g.num_vertices(), 0);
  for (std::size_t round = 0; round < matchings.size(); ++round) {
    std::fill(used.begin(), used.end(), 0);
    for (EdgeId e : matchings[round]) {
      if (e >= g.num_edges()) {
        throw std::invalid_argument("round " + std::to_string(round) + ": edge " +
                                    std::to_string(e) + " not in graph");
      }
      for (Vertex v : {g.edge(e).u, g.edge(e).v}) {
        if (used[v]) {
          throw std::invalid_argument("round " + std::to_string(round) +
                                      " is not a matching: vertex " + std::to_string(v) +
                                      " appears twice");
        }
        used[v] = 1;
      }
    }
  }

  const int stretch = 2 * k - 1;
  const ClusterThresholds thresholds(g.num_vertices(), k, k);
  SubgraphView h = SubgraphView::empty(g);
  SpannerResult result;
  result.algorithm = "parallel";
  result.params = SpannerParams{.n = g.num_vertices(), .k = k, .d = 1, .r = stretch};
  for (std::size_t round = 0; round < matchings.size(); ++round) {
    std::vector<EdgeId> passing;
    for (EdgeId e : matchings[round]) {
      const Edge& edge = g.edge(e);
      if (hop_distance(h, edge.u, edge.v, stretch) <= stretch) continue;
      passing.push_back(e);
      const int level_u = cluster_level(h, edge.u, thresholds);
      const int level_v = cluster_level(h, edge.v, thresholds);
      const bool boost_u = level_u < level_v || (level_u == level_v && edge.u < edge.v);
      result.boosts.push_back(BoostRecord{e, boost_u ? edge.v : edge.u,
                                          boost_u ? edge.u : edge.v, round});
    }
    for (EdgeId e : passing) {
      h.insert(e);
      const Edge& edge = g.edge(e);
      result.added_paths.push_back(PathSeq{{edge.u, edge.v}, {e}});
    }
  }
  result.edges = h.edge_ids();
  return result;
}

SqrtKStretch sqrt_k_stretch(int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  int root = 1;
  while (root * root < k) ++root;
  return SqrtKStretch{root, 4 * root * root + 2 * (2 * root - 1) * root};
}

SpannerResult sqrt_k_spanner(const Multigraph& g, int k) {
  const auto [d, r] = sqrt_k_stretch(k);
  SpannerResult result = greedy_dr_spanner(g, d, r);
  result.algorithm = "sqrt-k";
  result.params.k = k;
  return result;
}

SpannerResult union_hybrid_spanner(const Multigraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  SpannerResult one = greedy_dr_spanner(g, 1, 2 * k - 1);
  SpannerResult two = greedy_dr_spanner(g, 2, 2 * k);
  SpannerResult result;
  result.algorithm = "union";
  result.params = SpannerParams{.n = g.num_vertices(), .k = k, .d = 1, .r = 2 * k};
  result.edges = std::move(one.edges);
  merge_edges(result.edges, two.edges);
  result.added_paths = std::move(one.added_paths);
  for (auto& p : two.added_paths) result.added_paths.push_back(std::move(p));
  return result;
}

}  // namespace spanner
