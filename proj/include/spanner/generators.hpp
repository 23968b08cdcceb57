#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spanner/greedy_spanners.hpp"
#include "spanner/multigraph.hpp"

namespace spanner {

struct InstanceBundle {
  Multigraph graph;
  std::optional<PathCollection> paths;
  std::vector<std::vector<EdgeId>> matchings;
  std::string provenance;
};

/// Clique v_1..v_t (vertices 0..t-1) where each v_i also carries t-1
/// private leaves u_{i,1..t-1}; n = t^2. The path order is
/// (v_{i+j}, v_i, u_{i,j}) for (i, j) lexicographic, indices mod t.
InstanceBundle gen_big_clique(int t);

/// Hypercube Q_k with one matching per dimension, in dimension order.
/// Edges are numbered dimension by dimension.
InstanceBundle gen_hypercube(int k);

/// Unit-weight copy of `base` plus one pendant vertex x' per base vertex x,
/// joined by an edge of weight eps. Requires base connected with
/// girth > 2(k-1)+1 and 0 < eps < 1.
InstanceBundle gen_weighted_lower_bound(const Multigraph& base, double eps, int k);

/// Every base edge replaced by f parallel copies, plus one pendant vertex
/// per base vertex.
InstanceBundle gen_eft_lower_bound(const Multigraph& base, int f);

/// Erdos-Renyi G(n, p). Pairs (u, v), u < v, are visited in lexicographic
/// order and each consumes one draw of a std::mt19937_64 seeded with
/// `seed`; the draw x maps to (x >> 11) * 2^-53 in [0, 1) and the pair is
/// kept when that value is below p. When `weighted`, a second draw per kept
/// edge gives the weight 1 - (x >> 11) * 2^-53 in (0, 1].
InstanceBundle gen_random(std::size_t n, double p, std::uint64_t seed, bool weighted);

/// G(n, p) as in gen_random, then each kept pair receives between 1 and
/// max_multiplicity parallel copies (uniform, from the same stream).
InstanceBundle gen_random_multigraph(std::size_t n, double p, int max_multiplicity,
                                     std::uint64_t seed);

/// Splits the edge set into matchings by scanning edges in id order and
/// placing each into the first matching where both endpoints are free.
std::vector<std::vector<EdgeId>> greedy_matching_decomposition(const Multigraph& g);

// Small explicit graphs, all unweighted.
Multigraph path_graph(std::size_t n);
Multigraph cycle_graph(std::size_t n);
Multigraph complete_graph(std::size_t n);
Multigraph star_graph(std::size_t n);  // center 0
Multigraph petersen_graph();
Multigraph heawood_graph();

/// Catalog lookup for names "c<N>", "k<N>", "p<N>", "petersen", "heawood".
Multigraph named_graph(const std::string& name);

}  // namespace spanner
