#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace spanner {

/// Smallest integer c >= 0 with c^k >= n^r, i.e. the least count meeting
/// |B| >= n^{r/k}. Evaluated with arbitrary-precision integers.
std::uint64_t min_count_at_least_root(std::uint64_t n, int r, int k);

/// Smallest integer c >= 0 with (10 c)^k > n^r, i.e. the least count
/// strictly exceeding 0.1 * n^{r/k}.
std::uint64_t min_count_exceeding_tenth_root(std::uint64_t n, int r, int k);

/// Precomputed ball-size thresholds for the cluster definition at fixed
/// (n, k): `at_radius(r)` is the least ball size meeting n^{r/k}.
class ClusterThresholds {
 public:
  ClusterThresholds(std::size_t n, int k, int max_radius);

  std::uint64_t at_radius(int r) const { return table_.at(static_cast<std::size_t>(r)); }
  int max_radius() const { return static_cast<int>(table_.size()) - 1; }
  std::size_t n() const { return n_; }
  int k() const { return k_; }

 private:
  std::size_t n_;
  int k_;
  std::vector<std::uint64_t> table_;
};

}  // namespace spanner
