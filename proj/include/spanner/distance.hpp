#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spanner/path.hpp"
#include "spanner/subgraph_view.hpp"

namespace spanner {

/// Hop distance between x and y in `g` with the `excluded` edges removed.
/// Returns the exact distance when it is at most `cutoff`, otherwise
/// kBeyondCutoff. Throws std::invalid_argument on invalid vertex ids or a
/// negative cutoff.
int hop_distance(const SubgraphView& g, Vertex x, Vertex y, int cutoff,
                 std::span<const EdgeId> excluded = {});

/// Hop distances from `source` to every vertex; entries beyond `cutoff`
/// are kBeyondCutoff.
std::vector<int> hop_distances(const SubgraphView& g, Vertex source, int cutoff,
                               std::span<const EdgeId> excluded = {});

/// Vertices within `radius` hops of v, ascending.
std::vector<Vertex> hop_ball(const SubgraphView& g, Vertex v, int radius);

/// |B(v, r)| for r = 0..radius.
std::vector<std::size_t> ball_profile(const SubgraphView& g, Vertex v, int radius);

/// Weighted (Dijkstra) distances from `source`; entries beyond `limit` are
/// kInfiniteWeight.
std::vector<double> weighted_distances(const SubgraphView& g, Vertex source,
                                       double limit = kInfiniteWeight);

/// Weighted distance between x and y, or kInfiniteWeight when it exceeds
/// `limit` (or y is unreachable).
double weighted_distance(const SubgraphView& g, Vertex x, Vertex y,
                         double limit = kInfiniteWeight);

/// Vertices at weighted distance at most `radius` from v, ascending.
std::vector<Vertex> weighted_ball(const SubgraphView& g, Vertex v, double radius);

/// Length of the shortest cycle, kBeyondCutoff for forests. A pair of
/// parallel edges is a cycle of length 2.
int girth(const SubgraphView& g);

/// Lexicographically smallest shortest x-y path (by vertex sequence, then
/// by edge id on parallel edges) of length at most `cutoff`, avoiding the
/// excluded edges. Returns nullopt when no such path exists.
std::optional<PathSeq> shortest_path(const SubgraphView& g, Vertex x, Vertex y, int cutoff,
                                     std::span<const EdgeId> excluded = {});

}  // namespace spanner
