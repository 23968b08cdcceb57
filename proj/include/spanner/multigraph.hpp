#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace spanner {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Hop distance returned when the target lies beyond the requested cutoff
/// (or is unreachable).
inline constexpr int kBeyondCutoff = std::numeric_limits<int>::max();

inline constexpr double kInfiniteWeight = std::numeric_limits<double>::infinity();

struct Edge {
  EdgeId id;
  Vertex u;
  Vertex v;
  double weight;

  Vertex other(Vertex x) const { return x == u ? v : u; }
};

/// One entry of a vertex's adjacency list.
struct Incidence {
  Vertex neighbor;
  EdgeId edge;

  friend bool operator==(const Incidence&, const Incidence&) = default;
  friend auto operator<=>(const Incidence&, const Incidence&) = default;
};

/// Undirected graph with stable dense edge ids and optional positive
/// weights. Parallel edges are allowed and each copy keeps its own id;
/// self-loops are rejected.
///
/// Adjacency lists are kept sorted by (neighbor, edge id), so every
/// traversal that walks them in order is deterministic.
class Multigraph {
 public:
  explicit Multigraph(std::size_t n = 0, bool weighted = false);

  /// Adds an edge and returns its id (ids are assigned 0, 1, 2, ...).
  /// Throws std::invalid_argument on self-loops, out-of-range endpoints,
  /// non-positive weights, or a non-unit weight on an unweighted graph.
  EdgeId add_edge(Vertex u, Vertex v, double weight = 1.0);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  bool weighted() const { return weighted_; }

  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  /// Ids of all edges joining u and v, ascending.
  std::vector<EdgeId> edges_between(Vertex u, Vertex v) const;

  /// True when no two edges share the same endpoint pair.
  bool is_simple() const;

  void check_vertex(Vertex v) const;

 private:
  bool weighted_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

}  // namespace spanner
