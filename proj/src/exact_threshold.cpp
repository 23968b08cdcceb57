#include "spanner/exact_threshold.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <stdexcept>

namespace spanner {

namespace mp = boost::multiprecision;

namespace {

// Least c in [0, hi] with pred(c); pred must be monotone and pred(hi) true.
template <typename Pred>
std::uint64_t least_satisfying(std::uint64_t hi, Pred pred) {
  std::uint64_t lo = 0;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

void check_args(int r, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (r < 0) throw std::invalid_argument("radius must be nonnegative");
}

}  // namespace

std::uint64_t min_count_at_least_root(std::uint64_t n, int r, int k) {
  check_args(r, k);
  const mp::cpp_int target = mp::pow(mp::cpp_int(n), static_cast<unsigned>(r));
  // c = max(n^ceil(r/k), 1) always satisfies c^k >= n^r.
  mp::cpp_int hi_big = mp::pow(mp::cpp_int(n), static_cast<unsigned>((r + k - 1) / k));
  if (hi_big < 1) hi_big = 1;
  const std::uint64_t hi = hi_big > std::numeric_limits<std::uint64_t>::max()
                               ? std::numeric_limits<std::uint64_t>::max()
                               : static_cast<std::uint64_t>(hi_big);
  return least_satisfying(hi, [&](std::uint64_t c) {
    return mp::pow(mp::cpp_int(c), static_cast<unsigned>(k)) >= target;
  });
}

std::uint64_t min_count_exceeding_tenth_root(std::uint64_t n, int r, int k) {
  check_args(r, k);
  const mp::cpp_int target = mp::pow(mp::cpp_int(n), static_cast<unsigned>(r));
  mp::cpp_int hi_big = mp::pow(mp::cpp_int(n), static_cast<unsigned>((r + k - 1) / k)) + 1;
  const std::uint64_t hi = hi_big > std::numeric_limits<std::uint64_t>::max()
                               ? std::numeric_limits<std::uint64_t>::max()
                               : static_cast<std::uint64_t>(hi_big);
  return least_satisfying(hi, [&](std::uint64_t c) {
    return mp::pow(mp::cpp_int(c) * 10, static_cast<unsigned>(k)) > target;
  });
}

ClusterThresholds::ClusterThresholds(std::size_t n, int k, int max_radius) : n_(n), k_(k) {
  if (max_radius < 0) throw std::invalid_argument("max_radius must be nonnegative");
  table_.reserve(static_cast<std::size_t>(max_radius) + 1);
  for (int r = 0; r <= max_radius; ++r) table_.push_back(min_count_at_least_root(n, r, k));
}

}  // namespace spanner
