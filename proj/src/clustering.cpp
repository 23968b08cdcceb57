#include "spanner/clustering.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "spanner/distance.hpp"

namespace spanner {

namespace {

void check_n(const SubgraphView& h, std::size_t n) {
  if (h.num_vertices() != n) {
    throw std::invalid_argument("params.n = " + std::to_string(n) +
                                " does not match host vertex count " +
                                std::to_string(h.num_vertices()));
  }
}

}  // namespace

int cluster_level(const SubgraphView& h, Vertex v, const ClusterThresholds& thresholds) {
  const int max_radius = thresholds.max_radius();
  const auto sizes = ball_profile(h, v, max_radius);
  int level = 0;
  for (int r = 1; r <= max_radius; ++r) {
    if (sizes[static_cast<std::size_t>(r)] < thresholds.at_radius(r)) break;
    level = r;
  }
  return level;
}

bool has_cluster(const SubgraphView& h, Vertex v, int radius, const ClusterThresholds& thresholds) {
  if (radius > thresholds.max_radius()) {
    throw std::invalid_argument("cluster radius exceeds the precomputed thresholds");
  }
  if (radius <= 0) return true;
  const auto sizes = ball_profile(h, v, radius);
  for (int r = 1; r <= radius; ++r) {
    if (sizes[static_cast<std::size_t>(r)] < thresholds.at_radius(r)) return false;
  }
  return true;
}

ClusterLevel cluster_level(const SubgraphView& h, Vertex v, const SpannerParams& params) {
  check_n(h, params.n);
  const ClusterThresholds thresholds(params.n, params.k, params.k);
  return ClusterLevel{v, cluster_level(h, v, thresholds)};
}

bool is_fully_clustered(const SubgraphView& h, Vertex v, const SpannerParams& params, int s) {
  if (s < 1) throw std::invalid_argument("s must be at least 1");
  check_n(h, params.n);
  const int radius = (s + 1) / 2;
  const ClusterThresholds thresholds(params.n, params.k, radius);
  return has_cluster(h, v, radius, thresholds);
}

GreedyClusterer::GreedyClusterer(const Multigraph& g, int s, const SpannerParams& params)
    : g_(&g),
      s_(s),
      thresholds_(params.n, params.k, (s + 1) / 2),
      h_(SubgraphView::empty(g)) {
  if (s < 1) throw std::invalid_argument("s must be at least 1");
  if (params.n != g.num_vertices()) {
    throw std::invalid_argument("params.n does not match the graph");
  }
}

ClusteringVerdict GreedyClusterer::offer(EdgeId e) {
  const Edge& edge = g_->edge(e);
  if (hop_distance(h_, edge.u, edge.v, s_) <= s_) return ClusteringVerdict::kRejectedDistance;
  const int radius = full_radius();
  if (has_cluster(h_, edge.u, radius, thresholds_) && has_cluster(h_, edge.v, radius, thresholds_)) {
    return ClusteringVerdict::kRejectedClustered;
  }
  h_.insert(e);
  return ClusteringVerdict::kAdded;
}

void GreedyClusterer::force_insert(EdgeId e) { h_.insert(e); }

ClusteringTrace greedy_clustering(const Multigraph& g, int s, std::span<const EdgeId> edge_order,
                                  const SpannerParams& params) {
  for (EdgeId e : edge_order) {
    if (e >= g.num_edges()) {
      throw std::invalid_argument("edge " + std::to_string(e) + " not in graph");
    }
  }
  GreedyClusterer clusterer(g, s, params);
  ClusteringTrace trace;
  trace.steps.reserve(edge_order.size());
  for (EdgeId e : edge_order) {
    const auto verdict = clusterer.offer(e);
    trace.steps.push_back({e, verdict});
    if (verdict == ClusteringVerdict::kAdded) trace.added.push_back(e);
  }
  return trace;
}

}  // namespace spanner
