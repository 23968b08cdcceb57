#include "spanner/weighted_spanner.hpp"

#include <algorithm>
#include <iterator>
#include <random>
#include <stdexcept>
#include <tuple>

#include "spanner/distance.hpp"
#include "spanner/exact_threshold.hpp"

namespace spanner {

std::vector<EdgeId> WeightedSpannerResult::before_repairs() const {
  std::vector<EdgeId> out;
  for (int p = 0; p < 4; ++p) out.insert(out.end(), phase[p].begin(), phase[p].end());
  std::sort(out.begin(), out.end());
  return out;
}

const LateralStep* WeightedSpannerResult::lateral_step(Vertex v, Vertex u) const {
  for (const LateralStep& s : lateral) {
    if (s.v == v && s.u == u) return &s;
  }
  return nullptr;
}

const ReductionStep* WeightedSpannerResult::reduction_step(EdgeId e) const {
  for (const ReductionStep& s : reduction) {
    if (s.edge == e) return &s;
  }
  return nullptr;
}

std::vector<EdgeId> weight_order(const Multigraph& g) {
  std::vector<EdgeId> order(g.num_edges());
  for (EdgeId e = 0; e < order.size(); ++e) order[e] = e;
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return std::make_pair(g.edge(a).weight, a) < std::make_pair(g.edge(b).weight, b);
  });
  return order;
}

std::vector<EdgeId> greedy_weighted_spanner(const Multigraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  SubgraphView h = SubgraphView::empty(g);
  for (EdgeId e : weight_order(g)) {
    const Edge& edge = g.edge(e);
    const double limit = (2 * k - 1) * edge.weight;
    if (weighted_distance(h, edge.u, edge.v, limit) > limit) h.insert(e);
  }
  return h.edge_ids();
}

namespace {

// Maintains H°_{<=omega} for a nondecreasing sequence of thresholds.
class ThresholdedSpanner {
 public:
  ThresholdedSpanner(const Multigraph& g, std::span<const EdgeId> present)
      : g_(&g), pending_(present.begin(), present.end()), low_(SubgraphView::empty(g)) {
    std::sort(pending_.begin(), pending_.end(), [&](EdgeId a, EdgeId b) {
      return std::make_pair(g.edge(a).weight, a) < std::make_pair(g.edge(b).weight, b);
    });
  }

  void raise_to(double omega) {
    while (next_ < pending_.size() && g_->edge(pending_[next_]).weight <= omega) {
      low_.insert(pending_[next_++]);
    }
  }

  // Only edges of weight <= the current threshold may be inserted.
  void insert(EdgeId e) { low_.insert(e); }
  const SubgraphView& view() const { return low_; }

 private:
  const Multigraph* g_;
  std::vector<EdgeId> pending_;
  std::size_t next_ = 0;
  SubgraphView low_;
};

std::uint64_t count_far_pairs(const SubgraphView& low, std::span<const Vertex> from,
                              std::span<const Vertex> to, int k) {
  std::uint64_t count = 0;
  for (Vertex a : from) {
    const auto dist = hop_distances(low, a, k);
    for (Vertex b : to) {
      if (dist[b] == kBeyondCutoff) ++count;
    }
  }
  return count;
}

double two_path_bound(double w1, double w2, int k) {
  return w1 + w2 + (2 * k - 2) * std::max(w1, w2);
}

struct TwoPath {
  Vertex x;
  Vertex m;
  Vertex y;
  EdgeId first;   // {x, m}
  EdgeId second;  // {m, y}
};

std::vector<TwoPath> all_two_paths(const Multigraph& g) {
  std::vector<TwoPath> out;
  for (Vertex m = 0; m < g.num_vertices(); ++m) {
    const auto inc = g.incident(m);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = 0; j < inc.size(); ++j) {
        if (inc[i].neighbor >= inc[j].neighbor) continue;
        out.push_back({inc[i].neighbor, m, inc[j].neighbor, inc[i].edge, inc[j].edge});
      }
    }
  }
  return out;
}

}  // namespace

WeightedSpannerResult build_weighted_spanner(const Multigraph& g, int k) {
  if (k < 2) throw std::invalid_argument("weighted construction needs k >= 2");
  if (!g.is_simple()) throw std::invalid_argument("weighted construction needs a simple graph");
  const std::size_t n = g.num_vertices();
  const SpannerParams params{.n = n, .k = k};
  const int R = params.half_radius();
  const int odd = params.odd();

  WeightedSpannerResult result;
  result.k = k;
  SubgraphView h = SubgraphView::empty(g);
  const auto order = weight_order(g);

  // Phase 1: greedy (2k-1)-spanner.
  result.phase[0] = greedy_weighted_spanner(g, k);
  for (EdgeId e : result.phase[0]) h.insert(e);

  // Phase 2: greedy clustering with s = k on thresholded views.
  const ClusterThresholds cluster(n, k, R);
  result.saturation.saturated.assign(g.num_edges(), 0);
  result.saturation.cluster_threshold.assign(n, std::nullopt);
  {
    ThresholdedSpanner low(g, result.phase[0]);
    std::size_t i = 0;
    while (i < order.size()) {
      const double omega = g.edge(order[i]).weight;
      low.raise_to(omega);
      for (; i < order.size() && g.edge(order[i]).weight == omega; ++i) {
        const EdgeId e = order[i];
        const Edge& edge = g.edge(e);
        if (hop_distance(low.view(), edge.u, edge.v, k) <= k) {
          result.clustering.push_back({e, ClusteringVerdict::kRejectedDistance});
          continue;
        }
        if (has_cluster(low.view(), edge.u, R, cluster) &&
            has_cluster(low.view(), edge.v, R, cluster)) {
          result.saturation.saturated[e] = 1;
          result.clustering.push_back({e, ClusteringVerdict::kRejectedClustered});
          continue;
        }
        result.clustering.push_back({e, ClusteringVerdict::kAdded});
        result.phase[1].push_back(e);
        h.insert(e);
        low.insert(e);
      }
      for (Vertex v = 0; v < n; ++v) {
        auto& wv = result.saturation.cluster_threshold[v];
        if (!wv && has_cluster(low.view(), v, R, cluster)) wv = omega;
      }
    }
  }
  std::sort(result.phase[1].begin(), result.phase[1].end());

  // Phase 3: lateral clustering, one vertex at a time.
  const std::uint64_t ball_full = min_count_at_least_root(n, R, k);
  const std::uint64_t lateral_gain = min_count_exceeding_tenth_root(n, R - 1, k);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<LateralStep> candidates;
    for (const Incidence& inc : g.incident(v)) {
      const auto& wu = result.saturation.cluster_threshold[inc.neighbor];
      if (!wu) continue;
      const double key = (R - 1) * *wu + g.edge(inc.edge).weight;
      candidates.push_back({v, inc.neighbor, inc.edge, key, LateralVerdict::kSaturatedCandidate});
    }
    std::sort(candidates.begin(), candidates.end(), [](const LateralStep& a, const LateralStep& b) {
      return std::tie(a.key, a.u) < std::tie(b.key, b.u);
    });
    for (LateralStep& step : candidates) {
      const auto around_v = weighted_ball(h, v, step.key);
      if (around_v.size() >= ball_full) {
        step.verdict = LateralVerdict::kSaturatedCandidate;
      } else {
        const double wu = *result.saturation.cluster_threshold[step.u];
        const auto around_u = weighted_ball(h, step.u, (R - 1) * wu);
        std::vector<Vertex> t;
        std::set_difference(around_u.begin(), around_u.end(), around_v.begin(), around_v.end(),
                            std::back_inserter(t));
        if (t.size() >= lateral_gain) {
          step.verdict = LateralVerdict::kAdded;
          h.insert(step.edge);
          result.phase[2].push_back(step.edge);
        } else {
          step.verdict = LateralVerdict::kRoughlyContained;
        }
      }
      result.lateral.push_back(step);
    }
  }
  std::sort(result.phase[2].begin(), result.phase[2].end());

  // Phase 4: distance reduction between clusters.
  const std::uint64_t far_pairs = min_count_exceeding_tenth_root(n, k - 1, k);
  {
    const auto present = h.edge_ids();
    ThresholdedSpanner low(g, present);
    for (EdgeId e : order) {
      const Edge& edge = g.edge(e);
      low.raise_to(edge.weight);
      ReductionStep step{e, ReductionVerdict::kNearby};
      if (hop_distance(low.view(), edge.u, edge.v, k) > k) {
        const auto v_near = hop_ball(low.view(), edge.v, R - odd);
        const auto u_far = hop_ball(low.view(), edge.u, R - 1);
        step.pairs_forward = count_far_pairs(low.view(), v_near, u_far, k);
        const auto u_near = hop_ball(low.view(), edge.u, R - odd);
        const auto v_far = hop_ball(low.view(), edge.v, R - 1);
        step.pairs_backward = count_far_pairs(low.view(), u_near, v_far, k);
        if (step.pairs_forward >= far_pairs || step.pairs_backward >= far_pairs) {
          step.verdict = ReductionVerdict::kAdded;
          h.insert(e);
          low.insert(e);
          result.phase[3].push_back(e);
        } else {
          step.verdict = ReductionVerdict::kRoughlyCloseClusters;
        }
      }
      result.reduction.push_back(step);
    }
  }
  std::sort(result.phase[3].begin(), result.phase[3].end());

  // Phase 5: repair the remaining bad 2-paths.
  {
    std::vector<std::vector<double>> from(n);
    for (Vertex x = 0; x < n; ++x) from[x] = weighted_distances(h, x);
    std::vector<RepairStep> bad;
    for (const TwoPath& p : all_two_paths(g)) {
      const double w1 = g.edge(p.first).weight;
      const double w2 = g.edge(p.second).weight;
      if (!(from[p.x][p.y] > two_path_bound(w1, w2, k))) continue;
      const bool s1 = result.saturation.is_saturated(p.first);
      const bool s2 = result.saturation.is_saturated(p.second);
      if (!s1 && !s2) throw std::logic_error("bad 2-path without a saturated edge");
      EdgeId sat = s1 ? p.first : p.second;
      if (s1 && s2) {
        const auto rank = [&](EdgeId e) { return std::make_pair(-g.edge(e).weight, e); };
        sat = rank(p.first) < rank(p.second) ? p.first : p.second;
      }
      const EdgeId lat = sat == p.first ? p.second : p.first;
      const double key = 2 * g.edge(lat).weight + (k - 1) * g.edge(sat).weight;
      bad.push_back({p.x, p.m, p.y, sat, lat, key, false});
    }
    std::sort(bad.begin(), bad.end(), [](const RepairStep& a, const RepairStep& b) {
      return std::tie(a.key, a.x, a.m, a.y) < std::tie(b.key, b.x, b.m, b.y);
    });
    for (RepairStep& step : bad) {
      const double bound = two_path_bound(g.edge(step.sat).weight, g.edge(step.lat).weight, k);
      if (weighted_distance(h, step.x, step.y, bound) > bound) {
        step.added = true;
        for (EdgeId e : {step.sat, step.lat}) {
          if (!h.contains(e)) {
            h.insert(e);
            result.phase[4].push_back(e);
          }
        }
      }
      result.repairs.push_back(step);
    }
  }
  std::sort(result.phase[4].begin(), result.phase[4].end());

  result.edges = h.edge_ids();
  return result;
}

namespace {

class DistanceCache {
 public:
  explicit DistanceCache(const SubgraphView& h) : h_(h), rows_(h.num_vertices()) {}

  double operator()(Vertex x, Vertex y) {
    if (!rows_[x]) rows_[x] = weighted_distances(h_, x);
    return (*rows_[x])[y];
  }

 private:
  const SubgraphView& h_;
  std::vector<std::optional<std::vector<double>>> rows_;
};

}  // namespace

WeightedBoundReport verify_weighted_bound(const Multigraph& g, std::span<const EdgeId> h, int k,
                                          int max_hops, std::size_t sample, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const SubgraphView view(g, h);
  DistanceCache dist(view);
  WeightedBoundReport report;
  auto check = [&](const PathSeq& p) {
    const double bound = path_weight(g, p) + (2 * k - 2) * w_half(g, p);
    const double measured = dist(p.front(), p.back());
    const double ratio = measured / bound;
    ++report.paths_checked;
    if (!report.worst_path || ratio > report.worst_ratio) {
      report.worst_ratio = ratio;
      report.worst_path = p;
      report.worst_distance = measured;
      report.worst_bound = bound;
    }
  };

  for (const Edge& e : g.edges()) check(PathSeq{{e.u, e.v}, {e.id}});
  for (Vertex m = 0; m < g.num_vertices(); ++m) {
    const auto inc = g.incident(m);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (inc[i].neighbor == inc[j].neighbor) continue;
        check(PathSeq{{inc[i].neighbor, m, inc[j].neighbor}, {inc[i].edge, inc[j].edge}});
      }
    }
  }

  if (max_hops >= 3 && g.num_vertices() > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_length(3, max_hops);
    std::uniform_int_distribution<Vertex> pick_start(0, static_cast<Vertex>(g.num_vertices() - 1));
    std::vector<char> visited(g.num_vertices(), 0);
    const std::size_t max_attempts = 50 * sample + 100;
    std::size_t taken = 0;
    for (std::size_t attempt = 0; taken < sample && attempt < max_attempts; ++attempt) {
      const int length = pick_length(rng);
      PathSeq p{{pick_start(rng)}, {}};
      std::fill(visited.begin(), visited.end(), 0);
      visited[p.front()] = 1;
      while (static_cast<int>(p.hop_length()) < length) {
        std::vector<Incidence> options;
        for (const Incidence& inc : g.incident(p.back())) {
          if (!visited[inc.neighbor]) options.push_back(inc);
        }
        if (options.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        const Incidence next = options[pick(rng)];
        visited[next.neighbor] = 1;
        p.vertices.push_back(next.neighbor);
        p.edges.push_back(next.edge);
      }
      if (static_cast<int>(p.hop_length()) < length) continue;
      check(p);
      ++taken;
    }
  }
  report.pass = report.worst_ratio <= 1.0 + kWeightedTolerance;
  return report;
}

}  // namespace spanner
