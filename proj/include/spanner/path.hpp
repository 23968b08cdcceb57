#pragma once

#include <span>
#include <vector>

#include "spanner/multigraph.hpp"

namespace spanner {

/// A walk through a host graph, kept as both its vertex sequence and the
/// ids of the edges it traverses (one fewer than the vertices).
struct PathSeq {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  std::size_t hop_length() const { return edges.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  /// Builds the path that starts at `start` and follows `edges` in order.
  /// Throws std::invalid_argument if consecutive edges do not chain.
  static PathSeq from_edges(const Multigraph& g, Vertex start, std::span<const EdgeId> edges);

  friend bool operator==(const PathSeq&, const PathSeq&) = default;
};

/// Throws std::invalid_argument unless every named edge joins the
/// consecutive vertices it sits between.
void validate_path(const Multigraph& g, const PathSeq& p);

double path_weight(const Multigraph& g, const PathSeq& p);
double path_max_weight(const Multigraph& g, const PathSeq& p);
double path_min_weight(const Multigraph& g, const PathSeq& p);

/// Sum of the ceil(l/2) largest edge weights of a path with l >= 1 edges.
double w_half(const Multigraph& g, const PathSeq& p);
double w_half(std::span<const double> weights);

}  // namespace spanner
