#include "spanner/fault_tolerant.hpp"

#include <algorithm>
#include <limits>

#include "spanner/distance.hpp"

namespace spanner {

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget,
                               const std::string& what)
    : std::runtime_error(what + ": needs " + std::to_string(required) + " units, budget " +
                         std::to_string(budget)),
      required_(required),
      budget_(budget) {}

namespace {

bool has_edge(std::span<const EdgeId> ids, EdgeId e) {
  return std::find(ids.begin(), ids.end(), e) != ids.end();
}

void require_unweighted(const Multigraph& g) {
  if (g.weighted()) throw std::invalid_argument("construction expects an unweighted graph");
}

// Depth-limited branching on the edges of a shortest short path. Every
// admissible F must hit that path, so at the first depth with any hit all
// minimum-size fault sets are found.
class FaultSearch {
 public:
  FaultSearch(const SubgraphView& h, const PathSeq& p, int r, std::uint64_t budget)
      : h_(h), p_(p), r_(r), budget_(budget) {}

  std::vector<std::vector<EdgeId>> hits_of_size(int size) {
    hits_.clear();
    removed_.clear();
    branch(size);
    std::sort(hits_.begin(), hits_.end());
    hits_.erase(std::unique(hits_.begin(), hits_.end()), hits_.end());
    return hits_;
  }

 private:
  void branch(int depth_left) {
    if (++used_ > budget_) {
      throw BudgetExceeded(used_, budget_, "fault-set search exceeded its budget");
    }
    const auto path = shortest_path(h_, p_.front(), p_.back(), r_, removed_);
    if (!path) {
      auto hit = removed_;
      std::sort(hit.begin(), hit.end());
      hits_.push_back(std::move(hit));
      return;
    }
    if (depth_left == 0) return;
    for (EdgeId e : path->edges) {
      if (has_edge(p_.edges, e)) continue;
      removed_.push_back(e);
      branch(depth_left - 1);
      removed_.pop_back();
    }
  }

  const SubgraphView& h_;
  const PathSeq& p_;
  int r_;
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
  std::vector<EdgeId> removed_;
  std::vector<std::vector<EdgeId>> hits_;
};

}  // namespace

std::optional<FaultSet> find_fault_set(const SubgraphView& h, const PathSeq& p, int r, int f,
                                       std::uint64_t budget) {
  if (f < 0) throw std::invalid_argument("f must be nonnegative");
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  if (p.vertices.empty()) throw std::invalid_argument("path has no vertices");
  FaultSearch search(h, p, r, budget);
  for (int size = 0; size <= f; ++size) {
    auto hits = search.hits_of_size(size);
    if (!hits.empty()) return FaultSet{std::move(hits.front()), f};
  }
  return std::nullopt;
}

std::vector<PathSeq> enumerate_d_paths(const Multigraph& g, int d) {
  if (d != 1 && d != 2) throw std::invalid_argument("only d in {1, 2} is supported");
  std::vector<PathSeq> out;
  const auto n = static_cast<Vertex>(g.num_vertices());
  for (Vertex x = 0; x < n; ++x) {
    if (d == 1) {
      for (const Incidence& inc : g.incident(x)) {
        if (inc.neighbor > x) out.push_back(PathSeq{{x, inc.neighbor}, {inc.edge}});
      }
      continue;
    }
    std::vector<PathSeq> from_x;
    for (const Incidence& first : g.incident(x)) {
      for (const Incidence& second : g.incident(first.neighbor)) {
        if (second.neighbor <= x) continue;
        from_x.push_back(
            PathSeq{{x, first.neighbor, second.neighbor}, {first.edge, second.edge}});
      }
    }
    std::stable_sort(from_x.begin(), from_x.end(), [](const PathSeq& a, const PathSeq& b) {
      return a.back() < b.back();
    });
    out.insert(out.end(), from_x.begin(), from_x.end());
  }
  return out;
}

EftResult eft_greedy_exact(const Multigraph& g, int d, int r, int f, std::uint64_t budget) {
  require_unweighted(g);
  if (r < d) throw std::invalid_argument("r must be at least d");
  if (f < 0) throw std::invalid_argument("f must be nonnegative");
  SubgraphView h = SubgraphView::empty(g);
  EftResult result;
  result.spanner.algorithm = "eft-exact";
  result.spanner.params = SpannerParams{.n = g.num_vertices(), .k = 1, .d = d, .r = r, .f = f};
  for (PathSeq& p : enumerate_d_paths(g, d)) {
    auto faults = find_fault_set(h, p, r, f, budget);
    if (!faults) continue;
    for (EdgeId e : p.edges) h.insert(e);
    result.spanner.added_paths.push_back(std::move(p));
    result.blocking.witnesses.push_back(std::move(faults->edges));
  }
  result.spanner.edges = h.edge_ids();
  return result;
}

ModifiedGreedyResult eft_modified_greedy(const Multigraph& g, int k, int f, DetourMode mode) {
  require_unweighted(g);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (f < 0) throw std::invalid_argument("f must be nonnegative");
  const int r = 2 * k;
  SubgraphView h = SubgraphView::empty(g);
  ModifiedGreedyResult result;
  result.spanner.algorithm = "eft-fast";
  result.spanner.params = SpannerParams{.n = g.num_vertices(), .k = k, .d = 2, .r = r, .f = f};
  for (PathSeq& p : enumerate_d_paths(g, 2)) {
    DetourStep step;
    std::vector<EdgeId> removed;
    if (mode == DetourMode::kLiteral) removed = p.edges;
    int found = 0;
    while (found < f + 1) {
      auto detour = shortest_path(h, p.front(), p.back(), r, removed);
      if (!detour) break;
      bool blocks_outright = true;
      for (EdgeId e : detour->edges) {
        if (mode == DetourMode::kProtectPathEdges && has_edge(p.edges, e)) continue;
        blocks_outright = false;
        removed.push_back(e);
      }
      step.detours.push_back(std::move(*detour));
      ++found;
      if (blocks_outright) {
        found = f + 1;
        break;
      }
    }
    step.added = found < f + 1;
    if (step.added) {
      std::vector<EdgeId> witness;
      for (EdgeId e : removed) {
        if (!has_edge(p.edges, e)) witness.push_back(e);
      }
      std::sort(witness.begin(), witness.end());
      witness.erase(std::unique(witness.begin(), witness.end()), witness.end());
      for (EdgeId e : p.edges) h.insert(e);
      result.spanner.added_paths.push_back(p);
      result.blocking.witnesses.push_back(std::move(witness));
    }
    step.path = std::move(p);
    result.steps.push_back(std::move(step));
  }
  result.spanner.edges = h.edge_ids();
  return result;
}

SpannerResult eft_edge_greedy_2k1(const Multigraph& g, int k, int f, std::uint64_t budget) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (f < 0) throw std::invalid_argument("f must be nonnegative");
  const int r = 2 * k - 1;
  SubgraphView h = SubgraphView::empty(g);
  SpannerResult result;
  result.algorithm = "eft-2k1";
  result.params = SpannerParams{.n = g.num_vertices(), .k = k, .d = 1, .r = r, .f = f};
  for (const Edge& e : g.edges()) {
    PathSeq p{{e.u, e.v}, {e.id}};
    if (!find_fault_set(h, p, r, f, budget)) continue;
    h.insert(e.id);
    result.added_paths.push_back(std::move(p));
  }
  result.edges = h.edge_ids();
  return result;
}

SpannerResult eft_union_spanner(const Multigraph& g, int k, int f, bool fast,
                                std::uint64_t budget) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  SpannerResult one = eft_edge_greedy_2k1(g, k, f, budget);
  SpannerResult two = fast ? eft_modified_greedy(g, k, f).spanner
                           : eft_greedy_exact(g, 2, 2 * k, f, budget).spanner;
  SpannerResult result;
  result.algorithm = fast ? "eft-union-fast" : "eft-union";
  result.params = SpannerParams{.n = g.num_vertices(), .k = k, .d = 1, .r = 2 * k, .f = f};
  result.edges = std::move(one.edges);
  merge_edges(result.edges, two.edges);
  result.added_paths = std::move(one.added_paths);
  for (auto& p : two.added_paths) result.added_paths.push_back(std::move(p));
  return result;
}

bool verify_blocking_set(const Multigraph& host, std::span<const PathSeq> paths,
                         const BlockingRecord& rec, int r, int f) {
  if (rec.witnesses.size() != paths.size()) {
    throw std::invalid_argument("blocking record has " + std::to_string(rec.witnesses.size()) +
                                " witnesses for " + std::to_string(paths.size()) + " paths");
  }
  SubgraphView prefix = SubgraphView::empty(host);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const PathSeq& p = paths[i];
    const auto& witness = rec.witnesses[i];
    if (witness.size() > static_cast<std::size_t>(f)) return false;
    for (EdgeId e : witness) {
      if (e >= host.num_edges() || has_edge(p.edges, e)) return false;
    }
    if (hop_distance(prefix, p.front(), p.back(), r, witness) <= r) return false;
    for (EdgeId e : p.edges) prefix.insert(e);
  }
  return true;
}

}  // namespace spanner
