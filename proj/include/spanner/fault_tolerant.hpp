#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spanner/greedy_spanners.hpp"
#include "spanner/multigraph.hpp"
#include "spanner/path.hpp"
#include "spanner/subgraph_view.hpp"

namespace spanner {

/// Thrown when an exhaustive search would need more work units than its
/// budget allows. `required()` is the number of units the search needed
/// (or a lower bound on it when the total is not known in advance).
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget, const std::string& what);
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 20'000'000;

struct FaultSet {
  std::vector<EdgeId> edges;  // ascending
  int bound = 0;              // f
};

/// Witness F_i per added path, aligned with the added-path list.
struct BlockingRecord {
  std::vector<std::vector<EdgeId>> witnesses;
};

/// Finds F with |F| <= f, F disjoint from E(p) and dist_{h-F}(x, y) > r,
/// where x, y are the endpoints of p. Edges of p that lie in h are never
/// removed. Among all such F, returns the smallest, ties broken by the
/// lexicographic order of the sorted edge ids; nullopt when none exists.
/// Each BFS counts as one unit against `budget`.
std::optional<FaultSet> find_fault_set(const SubgraphView& h, const PathSeq& p, int r, int f,
                                       std::uint64_t budget = kDefaultSearchBudget);

struct EftResult {
  SpannerResult spanner;
  BlockingRecord blocking;
};

/// Every path with `d` edges, grouped by endpoint pair (x < y) in
/// lexicographic order, then by interior vertex, then by edge ids.
/// Supports d in {1, 2}.
std::vector<PathSeq> enumerate_d_paths(const Multigraph& g, int d);

/// Exact fault-tolerant greedy: a d-path is added iff some admissible fault
/// set pushes its endpoints more than r apart in the current H. Supports
/// d in {1, 2} on unweighted (multi)graphs.
EftResult eft_greedy_exact(const Multigraph& g, int d, int r, int f,
                           std::uint64_t budget = kDefaultSearchBudget);

enum class DetourMode {
  /// Edges of P already in H stay usable and are never removed; a detour
  /// made only of such edges blocks P outright.
  kProtectPathEdges,
  /// H' = H minus E(P) before extraction, as in the plain pseudocode. Its
  /// witnesses can fail the blocking-set condition when E(P) meets H.
  kLiteral,
};

struct DetourStep {
  PathSeq path;
  bool added = false;
  std::vector<PathSeq> detours;  // extracted x-y paths, in extraction order
};

struct ModifiedGreedyResult {
  SpannerResult spanner;
  BlockingRecord blocking;
  std::vector<DetourStep> steps;  // one per 2-path, in processing order
};

/// Polynomial-time variant: for each 2-path, extract up to f+1 paths of
/// length <= 2k by repeated shortest-path search and edge removal; add
/// the 2-path iff fewer than f+1 were found. The witness of an added path
/// is the union of the removed edges.
ModifiedGreedyResult eft_modified_greedy(const Multigraph& g, int k, int f,
                                         DetourMode mode = DetourMode::kProtectPathEdges);

/// Fault-tolerant greedy (2k-1)-spanner over edges in id order.
SpannerResult eft_edge_greedy_2k1(const Multigraph& g, int k, int f,
                                  std::uint64_t budget = kDefaultSearchBudget);

/// eft_edge_greedy_2k1 united with the fault-tolerant 2 -> 2k greedy
/// (exact, or the polynomial variant when `fast`).
SpannerResult eft_union_spanner(const Multigraph& g, int k, int f, bool fast = false,
                                std::uint64_t budget = kDefaultSearchBudget);

/// True iff every witness F_i has |F_i| <= f, avoids E(P_i), uses host
/// edges only, and separates the endpoints of P_i by more than r hops in
/// the union of the earlier paths minus F_i. Throws std::invalid_argument
/// when the record and the path list differ in length.
bool verify_blocking_set(const Multigraph& host, std::span<const PathSeq> paths,
                         const BlockingRecord& rec, int r, int f);

}  // namespace spanner
