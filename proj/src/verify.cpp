#include "spanner/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "spanner/fault_tolerant.hpp"

namespace spanner {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

// Full BFS over the edges allowed by `mask`; independent of graph-core.
std::vector<int> bfs_all(const Multigraph& g, const std::vector<char>& mask, Vertex source) {
  std::vector<int> dist(g.num_vertices(), kBeyondCutoff);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex a = queue[head];
    for (const Incidence& inc : g.incident(a)) {
      if (!mask[inc.edge] || dist[inc.neighbor] != kBeyondCutoff) continue;
      dist[inc.neighbor] = dist[a] + 1;
      queue.push_back(inc.neighbor);
    }
  }
  return dist;
}

// Returns the bound for a pair, or nullopt when the pair is not constrained.
using PairBound = std::function<std::optional<std::int64_t>(int host_distance)>;

VerificationReport verify_under_faults(const Multigraph& g, std::span<const EdgeId> h, int f,
                                       std::uint64_t budget, const PairBound& bound_for) {
  if (f < 0) throw std::invalid_argument("f must be nonnegative");
  const std::size_t m = g.num_edges();
  std::vector<char> in_h(m, 0);
  for (EdgeId e : h) {
    if (e >= m) {
      throw std::invalid_argument("spanner edge " + std::to_string(e) + " is not an edge of G");
    }
    in_h[e] = 1;
  }
  const std::size_t n = g.num_vertices();
  const std::uint64_t pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const std::uint64_t required = saturating_mul(fault_set_count(m, f), pairs);
  if (required > budget) {
    throw BudgetExceeded(required, budget, "exhaustive verification exceeds its budget");
  }

  VerificationReport report;
  std::vector<char> g_mask(m, 1);
  std::vector<char> h_mask = in_h;
  std::vector<EdgeId> faults;

  auto check_current = [&]() -> bool {
    ++report.fault_sets;
    for (Vertex x = 0; x < n; ++x) {
      const auto dg = bfs_all(g, g_mask, x);
      const auto dh = bfs_all(g, h_mask, x);
      for (Vertex y = x + 1; y < n; ++y) {
        ++report.pairs_checked;
        if (dg[y] == kBeyondCutoff) continue;
        const auto bound = bound_for(dg[y]);
        if (!bound) continue;
        if (dh[y] != kBeyondCutoff && dh[y] <= *bound) continue;
        report.pass = false;
        report.counterexample = Counterexample{x, y, faults, dg[y], dh[y], *bound};
        return false;
      }
    }
    return true;
  };

  // Subsets by size, then lexicographic.
  std::function<bool(std::size_t, int)> extend = [&](std::size_t start, int left) -> bool {
    if (left == 0) return check_current();
    for (std::size_t e = start; e < m; ++e) {
      faults.push_back(static_cast<EdgeId>(e));
      g_mask[e] = 0;
      h_mask[e] = 0;
      const bool ok = extend(e + 1, left - 1);
      faults.pop_back();
      g_mask[e] = 1;
      h_mask[e] = in_h[e];
      if (!ok) return false;
    }
    return true;
  };
  for (int size = 0; size <= f; ++size) {
    if (!extend(0, size)) break;
  }
  return report;
}

}  // namespace

std::uint64_t fault_set_count(std::size_t m, int f) {
  std::uint64_t total = 0;
  std::uint64_t term = 1;  // C(m, s)
  for (int s = 0; s <= f; ++s) {
    if (s > 0) {
      if (static_cast<std::size_t>(s) > m) break;
      const std::uint64_t factor = m - static_cast<std::size_t>(s) + 1;
      const std::uint64_t next = saturating_mul(term, factor);
      term = next == kSaturated ? kSaturated : next / static_cast<std::uint64_t>(s);
    }
    total = term > kSaturated - total ? kSaturated : total + term;
  }
  return total;
}

VerificationReport verify_dr(const Multigraph& g, std::span<const EdgeId> h, int d, int r,
                             std::uint64_t budget) {
  return verify_eft(g, h, d, r, 0, budget);
}

VerificationReport verify_eft(const Multigraph& g, std::span<const EdgeId> h, int d, int r, int f,
                              std::uint64_t budget) {
  if (d < 0 || r < d) throw std::invalid_argument("need 0 <= d <= r");
  return verify_under_faults(g, h, f, budget, [&](int dg) -> std::optional<std::int64_t> {
    if (dg != d) return std::nullopt;
    return r;
  });
}

VerificationReport verify_alpha_beta(const Multigraph& g, std::span<const EdgeId> h, int alpha,
                                     int beta, int f, std::uint64_t budget) {
  if (alpha < 1 || beta < 0) throw std::invalid_argument("need alpha >= 1 and beta >= 0");
  return verify_under_faults(g, h, f, budget, [&](int dg) -> std::optional<std::int64_t> {
    return static_cast<std::int64_t>(alpha) * dg + beta;
  });
}

SizeReport size_report(std::size_t edges, std::size_t n, double k) {
  if (!(k > 0.0)) throw std::invalid_argument("k must be positive");
  SizeReport report{edges, n, k, 0.0};
  if (n == 0) return report;
  const double exponent = std::isinf(k) ? 1.0 : 1.0 + 1.0 / k;
  report.ratio = static_cast<double>(edges) / std::pow(static_cast<double>(n), exponent);
  return report;
}

}  // namespace spanner
