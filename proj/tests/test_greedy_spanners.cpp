#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "spanner/distance.hpp"
#include "spanner/generators.hpp"
#include "spanner/greedy_spanners.hpp"

using namespace spanner;

namespace {

Multigraph random_simple(std::mt19937_64& rng, std::size_t n, double p) {
  Multigraph g(n);
  std::bernoulli_distribution keep(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (keep(rng)) g.add_edge(u, v);
  return g;
}

// Lexicographically smallest shortest x-y path read off an all-pairs table.
std::vector<EdgeId> oracle_lex_path(const Multigraph& g, const std::vector<std::vector<int>>& d,
                                    Vertex x, Vertex y) {
  std::vector<EdgeId> out;
  Vertex cur = x;
  while (cur != y) {
    Vertex best_v = 0;
    EdgeId best_e = 0;
    bool found = false;
    for (const Edge& e : g.edges()) {
      if (e.u != cur && e.v != cur) continue;
      const Vertex nxt = e.other(cur);
      if (d[nxt][y] != d[cur][y] - 1) continue;
      if (!found || nxt < best_v || (nxt == best_v && e.id < best_e)) {
        best_v = nxt;
        best_e = e.id;
        found = true;
      }
    }
    out.push_back(best_e);
    cur = best_v;
  }
  return out;
}

std::vector<EdgeId> oracle_greedy_dr(const Multigraph& g, int d, int r) {
  const auto dg = oracle::hop_matrix(g, oracle::all_edges(g));
  oracle::Mask h(g.num_edges(), 0);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    for (Vertex y = x + 1; y < g.num_vertices(); ++y) {
      if (dg[x][y] != d || oracle::hop_matrix(g, h)[x][y] <= r) continue;
      for (EdgeId e : oracle_lex_path(g, dg, x, y)) h[e] = 1;
    }
  }
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (h[e]) out.push_back(e);
  return out;
}

bool dr_holds(const Multigraph& g, const std::vector<EdgeId>& h, int d, int r) {
  return oracle::is_eft_spanner(g, h, d, r, 0);
}

}  // namespace

TEST_CASE("greedy_dr_spanner examples") {
  const Multigraph k4 = complete_graph(4);
  CHECK(greedy_dr_spanner(k4, 2, 4).edges.empty());

  const Multigraph c6 = cycle_graph(6);
  const auto r = greedy_dr_spanner(c6, 2, 4);
  CHECK(dr_holds(c6, r.edges, 2, 4));
  CHECK(r.algorithm == "greedy-dr");

  const Multigraph c5 = cycle_graph(5);
  CHECK(greedy_dr_spanner(c5, 1, 3).edges.size() == 5);

  CHECK_THROWS_AS(greedy_dr_spanner(c5, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(greedy_dr_spanner(c5, 3, 2), std::invalid_argument);
  Multigraph w(2, true);
  w.add_edge(0, 1, 0.5);
  CHECK_THROWS_AS(greedy_dr_spanner(w, 1, 1), std::invalid_argument);
}

TEST_CASE("greedy_dr_spanner matches an independent replay") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 6 + trial % 8;
    const Multigraph g = random_simple(rng, n, 0.35);
    for (auto [d, r] : {std::pair{1, 1}, std::pair{1, 3}, std::pair{2, 2}, std::pair{2, 4},
                        std::pair{3, 5}}) {
      const auto res = greedy_dr_spanner(g, d, r);
      CHECK(res.edges == oracle_greedy_dr(g, d, r));
      CHECK(dr_holds(g, res.edges, d, r));
      for (const PathSeq& p : res.added_paths) CHECK(static_cast<int>(p.hop_length()) == d);
    }
  }
}

TEST_CASE("2 -> 2k greedy replays the combinatorial formulation and the distant-pair claim") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const Multigraph g = random_simple(rng, 10 + trial % 6, 0.4);
    for (int k : {1, 2, 3}) {
      const auto res = greedy_dr_spanner(g, 2, 2 * k);
      oracle::Mask prior(g.num_edges(), 0);
      for (const PathSeq& p : res.added_paths) {
        const auto d = oracle::hop_matrix(g, prior);
        CHECK(d[p.front()][p.back()] > 2 * k);
        const Vertex m = p.vertices[1];
        CHECK((d[p.front()][m] > k || d[m][p.back()] > k));
        for (EdgeId e : p.edges) prior[e] = 1;
      }
    }
  }
}

TEST_CASE("2 -> 2k greedy size stays within 8 n^{1+1/k}") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {60, 120, 200}) {
    const Multigraph g = random_simple(rng, n, 0.15);
    for (int k : {2, 3}) {
      const auto res = greedy_dr_spanner(g, 2, 2 * k);
      CHECK(static_cast<double>(res.added_paths.size()) <=
            8.0 * std::pow(static_cast<double>(n), 1.0 + 1.0 / k));
    }
  }
}

TEST_CASE("greedy_path_collection_spanner on the big-clique instance") {
  for (int t : {4, 6}) {
    const auto bundle = gen_big_clique(t);
    REQUIRE(bundle.paths);
    const auto res = greedy_path_collection_spanner(bundle.graph, *bundle.paths, 4);
    for (Vertex a = 0; a < static_cast<Vertex>(t); ++a) {
      for (Vertex b = a + 1; b < static_cast<Vertex>(t); ++b) {
        const auto ids = bundle.graph.edges_between(a, b);
        REQUIRE(ids.size() == 1);
        CHECK(res.contains(ids.front()));
      }
    }
  }
}

TEST_CASE("greedy_path_collection_spanner rejects repeats and mixed lengths") {
  const Multigraph g = path_graph(4);
  const PathSeq p = PathSeq::from_edges(g, 0, std::vector<EdgeId>{0, 1});
  const PathCollection twice{4, {p, p}};
  const auto res = greedy_path_collection_spanner(g, twice, 2);
  CHECK(res.added_paths.size() == 1);
  CHECK(res.edges == std::vector<EdgeId>{0, 1});

  const PathSeq q = PathSeq::from_edges(g, 2, std::vector<EdgeId>{2});
  CHECK_THROWS_AS(greedy_path_collection_spanner(g, PathCollection{4, {p, q}}, 2),
                  std::invalid_argument);
}

TEST_CASE("parallel_greedy_spanner examples") {
  const auto q3 = gen_hypercube(3);
  const auto res = parallel_greedy_spanner(q3.graph, 3, q3.matchings);
  CHECK(res.edges.size() == 12);

  Multigraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  const std::vector<std::vector<EdgeId>> one{{0}};
  CHECK(parallel_greedy_spanner(g, 2, one).edges == std::vector<EdgeId>{0});
  const std::vector<std::vector<EdgeId>> again{{0}, {0}};
  const auto twice = parallel_greedy_spanner(g, 2, again);
  CHECK(twice.edges == std::vector<EdgeId>{0});
  CHECK(twice.boosts.size() == 1);

  const std::vector<std::vector<EdgeId>> clash{{0, 1}};
  try {
    parallel_greedy_spanner(g, 2, clash);
    FAIL("expected a matching error");
  } catch (const std::invalid_argument& err) {
    CHECK(std::string(err.what()).find("vertex 1") != std::string::npos);
  }
}

TEST_CASE("parallel greedy on hypercubes adds every edge") {
  for (int k = 2; k <= 6; ++k) {
    const auto q = gen_hypercube(k);
    const auto res = parallel_greedy_spanner(q.graph, k, q.matchings);
    CHECK(res.edges.size() == static_cast<std::size_t>(k) << (k - 1));
  }
}

TEST_CASE("parallel greedy size, stretch and orientation in-degree") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 20 + 10 * trial;
    const Multigraph g = random_simple(rng, n, 0.2);
    const auto matchings = greedy_matching_decomposition(g);
    for (int k : {2, 3}) {
      const auto res = parallel_greedy_spanner(g, k, matchings);
      const double nn = static_cast<double>(n);
      CHECK(static_cast<double>(res.edges.size()) <= 4.0 * k * std::pow(nn, 1.0 + 1.0 / k));
      std::map<Vertex, int> in_degree;
      CHECK(res.boosts.size() == res.edges.size());
      for (const BoostRecord& b : res.boosts) ++in_degree[b.head];
      for (const auto& [v, deg] : in_degree) CHECK(deg <= 4.0 * k * std::pow(nn, 1.0 / k));
      if (n <= 50) CHECK(dr_holds(g, res.edges, 1, 2 * k - 1));
    }
  }
}

TEST_CASE("sqrt_k_spanner stretch and examples") {
  CHECK(sqrt_k_stretch(1).d == 1);
  CHECK(sqrt_k_stretch(1).r == 6);
  CHECK(sqrt_k_stretch(4).d == 2);
  CHECK(sqrt_k_stretch(4).r == 28);
  CHECK(sqrt_k_stretch(9).d == 3);
  CHECK(sqrt_k_stretch(9).r == 66);
  CHECK(sqrt_k_stretch(5).d == 3);

  const Multigraph tri = complete_graph(3);
  CHECK(sqrt_k_spanner(tri, 1).edges.size() == 2);
  CHECK(sqrt_k_spanner(complete_graph(5), 4).edges.empty());

  std::mt19937_64 rng(2);
  const Multigraph g = random_simple(rng, 14, 0.2);
  CHECK(dr_holds(g, sqrt_k_spanner(g, 4).edges, 2, 28));
}

TEST_CASE("union_hybrid_spanner examples and (k, k-1) stretch") {
  const Multigraph tree = path_graph(7);
  CHECK(union_hybrid_spanner(tree, 3).edges.size() == 6);

  const Multigraph k5 = complete_graph(5);
  const auto u = union_hybrid_spanner(k5, 2);
  CHECK(oracle::is_alpha_beta(k5, u.edges, 3, 0, 0));

  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 5; ++trial) {
    const Multigraph g = random_simple(rng, 20, 0.3);
    for (int k : {2, 3}) {
      const auto res = union_hybrid_spanner(g, k);
      CHECK(oracle::is_alpha_beta(g, res.edges, k, k - 1, 0));
    }
  }
}
