#pragma once

#include <span>
#include <string>
#include <vector>

#include "spanner/params.hpp"
#include "spanner/path.hpp"
#include "spanner/subgraph_view.hpp"

namespace spanner {

/// Ordered paths over a common vertex set, all with the same hop length.
struct PathCollection {
  std::size_t n = 0;
  std::vector<PathSeq> paths;
};

/// Orientation of one parallel-greedy edge, from the endpoint with the
/// higher cluster level (tail) to the boosted endpoint (head).
struct BoostRecord {
  EdgeId edge;
  Vertex tail;
  Vertex head;
  std::size_t round;
};

struct SpannerResult {
  std::vector<EdgeId> edges;  // ascending, unique
  std::vector<PathSeq> added_paths;
  std::string algorithm;
  SpannerParams params;
  std::vector<BoostRecord> boosts;  // parallel greedy only

  bool contains(EdgeId id) const;
  SubgraphView view(const Multigraph& host) const;
};

/// Adds the edges of `paths` to `into`, keeping it sorted and unique.
void merge_edges(std::vector<EdgeId>& into, std::span<const EdgeId> extra);

/// Greedy d -> r spanner. Pairs at distance exactly d are visited in
/// lexicographic (x, y) order with x < y; when dist_H(x, y) > r the
/// lexicographically smallest shortest x-y path of G is added.
SpannerResult greedy_dr_spanner(const Multigraph& g, int d, int r);

/// Greedy d -> r spanner for a path collection over `host`: each path is
/// added iff its endpoints are more than r apart in the current H.
/// Throws std::invalid_argument when path lengths differ or a path does not
/// belong to `host`.
SpannerResult greedy_path_collection_spanner(const Multigraph& host, const PathCollection& coll,
                                             int r);

/// Parallel greedy 1 -> 2k-1 spanner over an ordered list of matchings.
/// All edges of a round are tested against the pre-round H and inserted
/// together. Throws std::invalid_argument when a round is not a matching.
SpannerResult parallel_greedy_spanner(const Multigraph& g, int k,
                                      std::span<const std::vector<EdgeId>> matchings);

struct SqrtKStretch {
  int d;
  int r;
};

/// d = ceil(sqrt(k)), r = 4 d^2 + 2 (2 d - 1) d.
SqrtKStretch sqrt_k_stretch(int k);

/// Greedy ceil(sqrt(k)) -> 4 ceil(sqrt(k))^2 + 2 (2 ceil(sqrt(k)) - 1) d spanner.
SpannerResult sqrt_k_spanner(const Multigraph& g, int k);

/// Union of the greedy 1 -> 2k-1 and 2 -> 2k spanners, a (k, k-1)-spanner.
SpannerResult union_hybrid_spanner(const Multigraph& g, int k);

}  // namespace spanner
