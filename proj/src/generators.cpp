#include "spanner/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "spanner/distance.hpp"

namespace spanner {

namespace {

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool is_connected(const Multigraph& g) {
  if (g.num_vertices() == 0) return true;
  const auto dist = hop_distances(SubgraphView::full(g), 0, static_cast<int>(g.num_vertices()));
  for (int d : dist) {
    if (d == kBeyondCutoff) return false;
  }
  return true;
}

bool has_unit_weights(const Multigraph& g) {
  for (const Edge& e : g.edges()) {
    if (e.weight != 1.0) return false;
  }
  return true;
}

}  // namespace

InstanceBundle gen_big_clique(int t) {
  if (t < 2) throw std::invalid_argument("big clique needs t >= 2");
  const auto tt = static_cast<std::size_t>(t);
  Multigraph g(tt * tt);
  // Clique edges first, then leaf edges (v_i, u_{i,j}) in (i, j) order.
  std::vector<std::vector<EdgeId>> clique_edge(tt, std::vector<EdgeId>(tt, 0));
  for (Vertex a = 0; a < tt; ++a) {
    for (Vertex b = a + 1; b < tt; ++b) {
      clique_edge[a][b] = clique_edge[b][a] = g.add_edge(a, b);
    }
  }
  auto leaf = [&](std::size_t i, std::size_t j) {
    return static_cast<Vertex>(tt + i * (tt - 1) + j);
  };
  std::vector<std::vector<EdgeId>> leaf_edge(tt, std::vector<EdgeId>(tt - 1, 0));
  for (std::size_t i = 0; i < tt; ++i) {
    for (std::size_t j = 0; j < tt - 1; ++j) {
      leaf_edge[i][j] = g.add_edge(static_cast<Vertex>(i), leaf(i, j));
    }
  }
  PathCollection paths{tt * tt, {}};
  for (std::size_t i = 0; i < tt; ++i) {
    for (std::size_t j = 0; j < tt - 1; ++j) {
      // 1-based (i + j) mod t with j starting at 1 is (i + j + 1) mod t here.
      const auto partner = static_cast<Vertex>((i + j + 1) % tt);
      const auto center = static_cast<Vertex>(i);
      paths.paths.push_back(PathSeq{{partner, center, leaf(i, j)},
                                    {clique_edge[partner][center], leaf_edge[i][j]}});
    }
  }
  return InstanceBundle{std::move(g), std::move(paths), {}, "big-clique t=" + std::to_string(t)};
}

InstanceBundle gen_hypercube(int k) {
  if (k < 1 || k > 16) throw std::invalid_argument("hypercube dimension must be in [1, 16]");
  const std::size_t n = std::size_t{1} << k;
  Multigraph g(n);
  std::vector<std::vector<EdgeId>> matchings(static_cast<std::size_t>(k));
  for (int dim = 0; dim < k; ++dim) {
    const Vertex bit = Vertex{1} << dim;
    for (Vertex v = 0; v < n; ++v) {
      if ((v & bit) == 0) matchings[static_cast<std::size_t>(dim)].push_back(g.add_edge(v, v | bit));
    }
  }
  return InstanceBundle{std::move(g), std::nullopt, std::move(matchings),
                        "hypercube k=" + std::to_string(k)};
}

InstanceBundle gen_weighted_lower_bound(const Multigraph& base, double eps, int k) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
  if (k < 2) throw std::invalid_argument("weighted lower bound needs k >= 2");
  if (!has_unit_weights(base)) throw std::invalid_argument("base graph must have unit weights");
  if (!is_connected(base)) throw std::invalid_argument("base graph must be connected");
  const int measured = girth(SubgraphView::full(base));
  const int needed = 2 * (k - 1) + 1;
  if (measured != kBeyondCutoff && measured <= needed) {
    throw std::invalid_argument("base girth " + std::to_string(measured) +
                                " must exceed 2(k-1)+1 = " + std::to_string(needed));
  }
  const std::size_t n = base.num_vertices();
  Multigraph g(2 * n, true);
  for (const Edge& e : base.edges()) g.add_edge(e.u, e.v, 1.0);
  for (Vertex x = 0; x < n; ++x) g.add_edge(x, static_cast<Vertex>(n + x), eps);
  return InstanceBundle{std::move(g), std::nullopt, {},
                        "weighted-lb k=" + std::to_string(k) + " eps=" + std::to_string(eps)};
}

InstanceBundle gen_eft_lower_bound(const Multigraph& base, int f) {
  if (f < 1) throw std::invalid_argument("eft lower bound needs f >= 1");
  if (base.weighted() || !has_unit_weights(base)) {
    throw std::invalid_argument("base graph must be unweighted");
  }
  if (!base.is_simple()) throw std::invalid_argument("base graph must be simple");
  const std::size_t n = base.num_vertices();
  Multigraph g(2 * n);
  for (const Edge& e : base.edges()) {
    for (int c = 0; c < f; ++c) g.add_edge(e.u, e.v);
  }
  for (Vertex x = 0; x < n; ++x) g.add_edge(x, static_cast<Vertex>(n + x));
  return InstanceBundle{std::move(g), std::nullopt, {}, "eft-lb f=" + std::to_string(f)};
}

InstanceBundle gen_random(std::size_t n, double p, std::uint64_t seed, bool weighted) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  Multigraph g(n, weighted);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!(unit_draw(rng) < p)) continue;
      const double w = weighted ? 1.0 - unit_draw(rng) : 1.0;
      g.add_edge(u, v, w);
    }
  }
  return InstanceBundle{std::move(g), std::nullopt, {},
                        "gnp n=" + std::to_string(n) + " seed=" + std::to_string(seed)};
}

InstanceBundle gen_random_multigraph(std::size_t n, double p, int max_multiplicity,
                                     std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  if (max_multiplicity < 1) throw std::invalid_argument("max_multiplicity must be at least 1");
  std::mt19937_64 rng(seed);
  Multigraph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!(unit_draw(rng) < p)) continue;
      const auto copies =
          1 + static_cast<int>(unit_draw(rng) * static_cast<double>(max_multiplicity));
      for (int c = 0; c < copies; ++c) g.add_edge(u, v);
    }
  }
  return InstanceBundle{std::move(g), std::nullopt, {},
                        "multi-gnp n=" + std::to_string(n) + " seed=" + std::to_string(seed)};
}

std::vector<std::vector<EdgeId>> greedy_matching_decomposition(const Multigraph& g) {
  std::vector<std::vector<EdgeId>> matchings;
  std::vector<std::vector<char>> busy;  // busy[i][v]: v covered by matching i
  for (const Edge& e : g.edges()) {
    std::size_t slot = 0;
    while (slot < matchings.size() && (busy[slot][e.u] || busy[slot][e.v])) ++slot;
    if (slot == matchings.size()) {
      matchings.emplace_back();
      busy.emplace_back(g.num_vertices(), 0);
    }
    matchings[slot].push_back(e.id);
    busy[slot][e.u] = busy[slot][e.v] = 1;
  }
  return matchings;
}

Multigraph path_graph(std::size_t n) {
  Multigraph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Multigraph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Multigraph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

Multigraph complete_graph(std::size_t n) {
  Multigraph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Multigraph star_graph(std::size_t n) {
  Multigraph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Multigraph petersen_graph() {
  Multigraph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Multigraph heawood_graph() {
  Multigraph g(14);
  for (Vertex i = 0; i < 14; ++i) g.add_edge(i, (i + 1) % 14);
  for (Vertex i = 0; i < 14; i += 2) g.add_edge(i, (i + 5) % 14);
  return g;
}

Multigraph named_graph(const std::string& name) {
  if (name == "petersen") return petersen_graph();
  if (name == "heawood") return heawood_graph();
  if (name.size() >= 2 && (name[0] == 'c' || name[0] == 'k' || name[0] == 'p')) {
    std::size_t consumed = 0;
    const auto size = std::stoul(name.substr(1), &consumed);
    if (consumed == name.size() - 1) {
      if (name[0] == 'c') return cycle_graph(size);
      if (name[0] == 'k') return complete_graph(size);
      return path_graph(size);
    }
  }
  throw std::invalid_argument("unknown graph name '" + name + "'");
}

}  // namespace spanner
