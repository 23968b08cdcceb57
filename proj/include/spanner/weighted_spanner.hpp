#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "spanner/clustering.hpp"
#include "spanner/multigraph.hpp"
#include "spanner/path.hpp"

namespace spanner {

/// Phase-2 bookkeeping. An edge is saturated when its endpoints were more
/// than k hops apart in H°_{<=w(e)} but both were already fully clustered.
/// cluster_threshold[v] is the first weight threshold at which v became
/// fully clustered, if ever.
struct SaturationRecord {
  std::vector<char> saturated;
  std::vector<std::optional<double>> cluster_threshold;

  bool is_saturated(EdgeId e) const { return saturated.at(e) != 0; }
};

enum class LateralVerdict {
  kAdded,
  kSaturatedCandidate,  // ball around v already large enough
  kRoughlyContained,    // T-test failed
};

struct LateralStep {
  Vertex v;
  Vertex u;
  EdgeId edge;
  double key;  // (R-1) w_u + w(v, u)
  LateralVerdict verdict;
};

enum class ReductionVerdict {
  kNearby,            // endpoints within k hops, no test
  kAdded,
  kRoughlyCloseClusters,
};

struct ReductionStep {
  EdgeId edge;
  ReductionVerdict verdict;
  std::uint64_t pairs_forward = 0;   // |P| with (v, u) as given
  std::uint64_t pairs_backward = 0;  // |P| with u, v swapped
};

struct RepairStep {
  Vertex x;
  Vertex m;
  Vertex y;
  EdgeId sat;
  EdgeId lat;
  double key;  // 2 w(lat) + (k-1) w(sat)
  bool added;
};

struct WeightedSpannerResult {
  int k = 0;
  std::array<std::vector<EdgeId>, 5> phase;  // edges added by phases 1..5, ascending
  std::vector<EdgeId> edges;                 // union, ascending
  SaturationRecord saturation;
  std::vector<ClusteringStep> clustering;    // Phase-2 verdict per edge, in processing order
  std::vector<LateralStep> lateral;
  std::vector<ReductionStep> reduction;
  std::vector<RepairStep> repairs;

  /// Union of phases 1-4.
  std::vector<EdgeId> before_repairs() const;
  const LateralStep* lateral_step(Vertex v, Vertex u) const;
  const ReductionStep* reduction_step(EdgeId e) const;
};

/// Edge ids sorted by (weight, id).
std::vector<EdgeId> weight_order(const Multigraph& g);

/// Greedy (2k-1)-spanner over edges in (weight, id) order.
std::vector<EdgeId> greedy_weighted_spanner(const Multigraph& g, int k);

/// Five-phase construction with dist_H(x, y) <= w(P) + (2k-2) w_half(P)
/// for every x-y path P. Requires a simple graph, k >= 2.
WeightedSpannerResult build_weighted_spanner(const Multigraph& g, int k);

struct WeightedBoundReport {
  bool pass = true;
  double worst_ratio = 0.0;
  std::optional<PathSeq> worst_path;
  double worst_distance = 0.0;
  double worst_bound = 0.0;
  std::uint64_t paths_checked = 0;
};

inline constexpr double kWeightedTolerance = 1e-9;

/// Checks dist_H(x, y) <= w(P) + (2k-2) w_half(P) on every path of one or
/// two hops and on `sample` random simple paths of 3..max_hops hops. Passes
/// when the worst ratio is at most 1 + kWeightedTolerance.
WeightedBoundReport verify_weighted_bound(const Multigraph& g, std::span<const EdgeId> h, int k,
                                          int max_hops, std::size_t sample, std::uint64_t seed);

}  // namespace spanner
