#pragma once

#include <cstddef>

namespace spanner {

/// Size and stretch parameters shared by the constructions.
///
/// `half_radius()` is ceil(k/2) and `odd()` is 1 for odd k, so
/// 2 * half_radius() - odd() == k always.
struct SpannerParams {
  std::size_t n = 0;
  int k = 1;
  int d = 1;
  int r = 1;
  int s = 1;
  int f = 0;

  int half_radius() const { return k % 2 == 1 ? (k + 1) / 2 : k / 2; }
  int odd() const { return k % 2 == 1 ? 1 : 0; }

  /// Throws std::invalid_argument unless k >= 1, f >= 0, d >= 0 and r >= d.
  void validate() const;
};

}  // namespace spanner
