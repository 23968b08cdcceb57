#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spanner/multigraph.hpp"

namespace spanner {

/// A pair violating a contract under a fault set. Distances are hop counts;
/// kBeyondCutoff stands for "disconnected".
struct Counterexample {
  Vertex x;
  Vertex y;
  std::vector<EdgeId> faults;
  int host_distance;  // in G - F
  int measured;       // in H - F
  std::int64_t bound;
};

struct VerificationReport {
  bool pass = true;
  std::optional<Counterexample> counterexample;
  std::uint64_t pairs_checked = 0;
  std::uint64_t fault_sets = 0;
};

/// Default cap on (fault set x vertex pair) checks.
inline constexpr std::uint64_t kDefaultVerifyBudget = 50'000'000;

/// Number of edge subsets of size at most f, saturating at UINT64_MAX.
std::uint64_t fault_set_count(std::size_t m, int f);

/// Every pair at G-distance exactly d is within r hops in H. Throws
/// std::invalid_argument when `h` names an edge outside g.
VerificationReport verify_dr(const Multigraph& g, std::span<const EdgeId> h, int d, int r,
                             std::uint64_t budget = kDefaultVerifyBudget);

/// For every F of at most f edges of g (by size, then lexicographic), every
/// pair at (G-F)-distance exactly d is within r hops in H - F. Stops at the
/// first counterexample. Throws BudgetExceeded when the number of
/// (fault set, pair) checks exceeds `budget`.
VerificationReport verify_eft(const Multigraph& g, std::span<const EdgeId> h, int d, int r, int f,
                              std::uint64_t budget = kDefaultVerifyBudget);

/// For every F of at most f edges and every pair connected in G - F,
/// dist_{H-F} <= alpha * dist_{G-F} + beta.
VerificationReport verify_alpha_beta(const Multigraph& g, std::span<const EdgeId> h, int alpha,
                                     int beta, int f,
                                     std::uint64_t budget = kDefaultVerifyBudget);

struct SizeReport {
  std::size_t edges = 0;
  std::size_t n = 0;
  double k = 0.0;
  double ratio = 0.0;  // edges / n^{1 + 1/k}
};

/// `k` may be infinite, in which case the ratio is edges / n.
SizeReport size_report(std::size_t edges, std::size_t n, double k);

}  // namespace spanner
