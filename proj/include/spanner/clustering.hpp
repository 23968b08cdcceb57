#pragma once

#include <span>
#include <vector>

#include "spanner/exact_threshold.hpp"
#include "spanner/params.hpp"
#include "spanner/subgraph_view.hpp"

namespace spanner {

/// A vertex has an l-cluster in H when |B_H(v, r)| >= n^{r/k} for every
/// r <= l; its cluster level is the largest such l (capped at the radius
/// examined).
struct ClusterLevel {
  Vertex vertex;
  int level;
};

/// Cluster level of v, searched up to radius params.k. Uses params.n and
/// params.k; params.n must equal the host vertex count.
ClusterLevel cluster_level(const SubgraphView& h, Vertex v, const SpannerParams& params);

/// Same, with precomputed thresholds; searched up to thresholds.max_radius().
int cluster_level(const SubgraphView& h, Vertex v, const ClusterThresholds& thresholds);

/// True iff v has a `radius`-cluster in h.
bool has_cluster(const SubgraphView& h, Vertex v, int radius, const ClusterThresholds& thresholds);

/// True iff v has a ceil(s/2)-cluster in h.
bool is_fully_clustered(const SubgraphView& h, Vertex v, const SpannerParams& params, int s);

enum class ClusteringVerdict {
  kAdded,
  kRejectedDistance,   // endpoints already within s hops
  kRejectedClustered,  // both endpoints fully clustered
};

struct ClusteringStep {
  EdgeId edge;
  ClusteringVerdict verdict;
};

struct ClusteringTrace {
  std::vector<EdgeId> added;
  std::vector<ClusteringStep> steps;
};

/// Incremental greedy clustering: an offered edge {u, v} is accepted iff
/// dist_H(u, v) > s and at least one endpoint lacks a ceil(s/2)-cluster in
/// the current H.
class GreedyClusterer {
 public:
  GreedyClusterer(const Multigraph& g, int s, const SpannerParams& params);

  ClusteringVerdict offer(EdgeId e);

  /// Puts an edge into H without testing it.
  void force_insert(EdgeId e);

  const SubgraphView& current() const { return h_; }
  int s() const { return s_; }
  int full_radius() const { return (s_ + 1) / 2; }

 private:
  const Multigraph* g_;
  int s_;
  ClusterThresholds thresholds_;
  SubgraphView h_;
};

/// Runs greedy clustering from an empty H over `edge_order` and returns the
/// accepted edges plus a verdict per offered edge.
ClusteringTrace greedy_clustering(const Multigraph& g, int s, std::span<const EdgeId> edge_order,
                                  const SpannerParams& params);

}  // namespace spanner
