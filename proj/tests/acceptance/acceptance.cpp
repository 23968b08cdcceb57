// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion also has a wall-clock limit.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "spanner/clustering.hpp"
#include "spanner/distance.hpp"
#include "spanner/fault_tolerant.hpp"
#include "spanner/generators.hpp"
#include "spanner/greedy_spanners.hpp"
#include "spanner/verify.hpp"
#include "spanner/weighted_spanner.hpp"

using namespace spanner;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Detail {
 public:
  template <typename T>
  Detail& operator<<(const T& value) {
    out_ << value;
    return *this;
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

double pow_n(std::size_t n, double exponent) { return std::pow(static_cast<double>(n), exponent); }

std::vector<EdgeId> id_order(const Multigraph& g) {
  std::vector<EdgeId> ids(g.num_edges());
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

std::vector<EdgeId> without(const Multigraph& g, EdgeId drop) {
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (e != drop) ids.push_back(e);
  return ids;
}

// Random multigraphs with at most `max_edges` edges, for exhaustive fault checks.
std::vector<Multigraph> enumerable_multigraphs(std::size_t count, std::size_t max_edges) {
  std::vector<Multigraph> out;
  for (std::uint64_t seed = 1; out.size() < count; ++seed) {
    const std::size_t n = 9 + seed % 6;
    Multigraph g = gen_random_multigraph(n, 0.25, 2, seed).graph;
    if (g.num_edges() == 0 || g.num_edges() > max_edges) continue;
    out.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------- criteria

Outcome big_clique() {
  Outcome o;
  Detail d;
  for (int t : {4, 6, 8}) {
    const auto bundle = gen_big_clique(t);
    const auto res = greedy_path_collection_spanner(bundle.graph, *bundle.paths, 4);
    int present = 0;
    for (Vertex a = 0; a < static_cast<Vertex>(t); ++a)
      for (Vertex b = a + 1; b < static_cast<Vertex>(t); ++b)
        present += res.contains(bundle.graph.edges_between(a, b).front()) ? 1 : 0;
    const int want = t * (t - 1) / 2;
    o.pass &= present == want;
    d << "t=" << t << ":" << present << "/" << want << " ";
  }
  o.detail = d.str();
  return o;
}

Outcome hypercube() {
  Outcome o;
  Detail d;
  for (int k = 2; k <= 6; ++k) {
    const auto q = gen_hypercube(k);
    const std::size_t got = parallel_greedy_spanner(q.graph, k, q.matchings).edges.size();
    const std::size_t want = static_cast<std::size_t>(k) << (k - 1);
    o.pass &= got == want;
    d << "k=" << k << ":" << got << "/" << want << " ";
  }
  o.detail = d.str();
  return o;
}

Outcome two_to_2k_correctness() {
  Outcome o;
  int passed = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 20 + static_cast<std::size_t>(i * 37) % 181;
    const int k = 2 + i % 2;
    const Multigraph g = gen_random(n, 6.0 / static_cast<double>(n), 1000 + i, false).graph;
    const auto res = greedy_dr_spanner(g, 2, 2 * k);
    const auto report = verify_dr(g, res.edges, 2, 2 * k);
    passed += report.pass ? 1 : 0;
  }
  o.pass = passed == 100;
  o.detail = std::to_string(passed) + "/100 instances pass";
  return o;
}

Outcome two_to_2k_size_trend() {
  Outcome o;
  Detail d;
  std::vector<double> ratios;
  for (std::size_t n : {100, 200, 400}) {
    double sum = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Multigraph g = gen_random(n, 8.0 / static_cast<double>(n), seed, false).graph;
      const auto res = greedy_dr_spanner(g, 2, 4);
      sum += static_cast<double>(res.added_paths.size()) / pow_n(n, 1.5);
    }
    const double avg = sum / 20;
    ratios.push_back(avg);
    o.pass &= avg <= 8.0;
    d << "n=" << n << ":" << avg << " ";
  }
  for (std::size_t i = 1; i < ratios.size(); ++i) o.pass &= ratios[i] <= 1.2 * ratios[i - 1];
  o.detail = d.str();
  return o;
}

Outcome parallel_bounds() {
  Outcome o;
  double worst_edges = 0, worst_degree = 0;
  auto check = [&](const Multigraph& g, int k, std::span<const std::vector<EdgeId>> matchings) {
    const auto res = parallel_greedy_spanner(g, k, matchings);
    const std::size_t n = g.num_vertices();
    const double edge_ratio =
        static_cast<double>(res.edges.size()) / (4.0 * k * pow_n(n, 1.0 + 1.0 / k));
    std::vector<int> in_degree(n, 0);
    for (const BoostRecord& b : res.boosts) ++in_degree[b.head];
    const int max_in = *std::max_element(in_degree.begin(), in_degree.end());
    const double degree_ratio = max_in / (4.0 * k * pow_n(n, 1.0 / k));
    worst_edges = std::max(worst_edges, edge_ratio);
    worst_degree = std::max(worst_degree, degree_ratio);
    o.pass &= edge_ratio <= 1.0 && degree_ratio <= 1.0 && res.boosts.size() == res.edges.size();
  };
  for (int k = 2; k <= 6; ++k) {
    const auto q = gen_hypercube(k);
    check(q.graph, k, q.matchings);
  }
  for (std::size_t n : {50, 100, 200}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const Multigraph g = gen_random(n, 0.1, seed, false).graph;
      const auto matchings = greedy_matching_decomposition(g);
      for (int k : {2, 3}) check(g, k, matchings);
    }
  }
  Detail d;
  d << "max edges/(4k n^{1+1/k})=" << worst_edges << " max in-degree/(4k n^{1/k})=" << worst_degree;
  o.detail = d.str();
  return o;
}

Outcome clustering_girth() {
  Outcome o;
  std::mt19937_64 rng(6);
  int passed = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 8 + trial % 23;
    const int s = 1 + trial % 5;
    const int k = 1 + (trial / 5) % 3;
    const Multigraph g = gen_random(n, 0.35, 500 + trial, false).graph;
    auto order = id_order(g);
    std::shuffle(order.begin(), order.end(), rng);
    const auto trace = greedy_clustering(g, s, order, SpannerParams{.n = n, .k = k});
    const int girth = oracle::girth(g, oracle::edge_mask(g, trace.added));
    passed += girth > s + 1 ? 1 : 0;
  }
  o.pass = passed == 200;
  o.detail = std::to_string(passed) + "/200 trials";
  return o;
}

Outcome neighborhood_exchange() {
  Outcome o;
  std::mt19937_64 rng(7);
  int cases = 0, passed = 0;
  while (cases < 1000) {
    const std::size_t n = 8 + rng() % 13;
    const Multigraph g = gen_random(n, 0.3, rng(), false).graph;
    std::bernoulli_distribution keep(0.5);
    oracle::Mask mask(g.num_edges(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) mask[e] = keep(rng) ? 1 : 0;
    const int s = 1 + static_cast<int>(rng() % 5);
    const auto before = oracle::hop_matrix(g, mask);
    std::vector<EdgeId> candidates;
    for (const Edge& e : g.edges())
      if (!mask[e.id] && before[e.u][e.v] > s) candidates.push_back(e.id);
    if (candidates.empty()) continue;
    const Edge& e = g.edge(candidates[rng() % candidates.size()]);
    const int l = static_cast<int>(rng() % static_cast<std::uint64_t>((s + 1) / 2));
    oracle::Mask added = mask;
    added[e.id] = 1;
    const auto after = oracle::hop_matrix(g, added);
    bool disjoint = true, contained = true;
    for (Vertex w = 0; w < n; ++w) {
      if (before[e.u][w] <= l && before[e.v][w] <= l + 1) disjoint = false;
      if (after[e.u][w] <= l && after[e.v][w] > l + 1) contained = false;
    }
    ++cases;
    passed += disjoint && contained ? 1 : 0;
  }
  o.pass = passed == cases;
  o.detail = std::to_string(passed) + "/" + std::to_string(cases) + " cases";
  return o;
}

Outcome weighted_optimal_instance() {
  Outcome o;
  const Multigraph g = gen_weighted_lower_bound(cycle_graph(5), 0.5, 2).graph;
  const auto res = build_weighted_spanner(g, 2);
  const std::size_t m = g.num_edges();
  int violated = 0, proper = 0;
  for (std::uint32_t bits = 0; bits + 1 < (1u << m); ++bits) {
    oracle::Mask mask(m, 0);
    for (std::size_t e = 0; e < m; ++e) mask[e] = (bits >> e) & 1u;
    ++proper;
    violated += oracle::two_paths_ok(g, mask, 2, 0.0) ? 0 : 1;
  }
  o.pass = res.edges.size() == 10 && g.num_edges() == 10 && violated == proper;
  Detail d;
  d << "spanner edges=" << res.edges.size() << "/10, proper subgraphs violating=" << violated << "/"
    << proper;
  o.detail = d.str();
  return o;
}

Outcome weighted_stretch() {
  Outcome o;
  double worst = 0;
  int passed = 0, runs = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 20 + static_cast<std::size_t>(i * 13) % 41;
    const Multigraph g = gen_random(n, 0.3, 2000 + i, true).graph;
    for (int k : {2, 3}) {
      const auto res = build_weighted_spanner(g, k);
      const auto report = verify_weighted_bound(g, res.edges, k, 8, 500, 3000 + i);
      worst = std::max(worst, report.worst_ratio);
      passed += report.pass && report.worst_ratio <= 1.0 + kWeightedTolerance ? 1 : 0;
      ++runs;
    }
  }
  o.pass = passed == runs;
  Detail d;
  d << passed << "/" << runs << " runs, worst ratio=" << worst;
  o.detail = d.str();
  return o;
}

Outcome eft_contract() {
  Outcome o;
  int passed = 0, runs = 0;
  std::size_t max_m = 0;
  auto graphs = enumerable_multigraphs(8, 40);
  graphs.push_back(gen_eft_lower_bound(cycle_graph(6), 1).graph);
  for (const Multigraph& g : graphs) {
    max_m = std::max(max_m, g.num_edges());
    for (int f : {1, 2}) {
      const auto exact = eft_greedy_exact(g, 2, 4, f);
      const auto fast = eft_modified_greedy(g, 2, f);
      passed += verify_eft(g, exact.spanner.edges, 2, 4, f).pass ? 1 : 0;
      passed += verify_eft(g, fast.spanner.edges, 2, 4, f).pass ? 1 : 0;
      runs += 2;
    }
  }
  o.pass = passed == runs && max_m <= 40;
  o.detail = std::to_string(passed) + "/" + std::to_string(runs) +
             " verifications, max m=" + std::to_string(max_m);
  return o;
}

Outcome eft_lower_bound() {
  Outcome o;
  const Multigraph g = gen_eft_lower_bound(cycle_graph(6), 2).graph;
  const auto res = eft_greedy_exact(g, 2, 4, 2);
  int counterexamples = 0;
  for (EdgeId drop = 0; drop < g.num_edges(); ++drop) {
    const auto report = verify_eft(g, without(g, drop), 2, 4, 2);
    counterexamples += report.pass ? 0 : 1;
  }
  o.pass = res.spanner.edges.size() == g.num_edges() &&
           counterexamples == static_cast<int>(g.num_edges());
  Detail d;
  d << "kept " << res.spanner.edges.size() << "/" << g.num_edges() << ", single removals failing "
    << counterexamples << "/" << g.num_edges();
  o.detail = d.str();
  return o;
}

Outcome linear_in_f() {
  Outcome o;
  Detail d;
  const std::size_t n = 150;
  double c = 0;
  for (int f : {1, 2, 3}) {
    const Multigraph g = gen_random_multigraph(n, 0.04, 2, 12).graph;
    const auto res = eft_greedy_exact(g, 2, 4, f);
    const double ratio = static_cast<double>(res.spanner.edges.size()) / (f * pow_n(n, 1.5));
    c = std::max(c, ratio);
    d << "f=" << f << ":|E|=" << res.spanner.edges.size() << " ";
  }
  o.pass = c <= 8.0;
  d << "c=" << c;
  o.detail = d.str();
  return o;
}

Outcome union_contracts() {
  Outcome o;
  int passed = 0, runs = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Multigraph g = gen_random(12 + seed * 2, 0.25, 40 + seed, false).graph;
    for (int k : {2, 3}) {
      passed += verify_alpha_beta(g, union_hybrid_spanner(g, k).edges, k, k - 1, 0).pass ? 1 : 0;
      ++runs;
    }
  }
  auto graphs = enumerable_multigraphs(6, 40);
  Multigraph c6(6);
  for (Vertex i = 0; i < 6; ++i) {
    c6.add_edge(i, (i + 1) % 6);
    c6.add_edge(i, (i + 1) % 6);
  }
  graphs.push_back(c6);
  for (const Multigraph& g : graphs) {
    for (bool fast : {false, true}) {
      const auto res = eft_union_spanner(g, 2, 1, fast);
      passed += verify_alpha_beta(g, res.edges, 2, 1, 1).pass ? 1 : 0;
      ++runs;
    }
  }
  o.pass = passed == runs;
  o.detail = std::to_string(passed) + "/" + std::to_string(runs) + " verifications";
  return o;
}

Outcome blocking_audit() {
  Outcome o;
  const int k = 2;
  int passed = 0, runs = 0;
  std::size_t max_exact = 0, max_fast = 0;
  auto graphs = enumerable_multigraphs(10, 40);
  graphs.push_back(gen_eft_lower_bound(cycle_graph(6), 2).graph);
  for (const Multigraph& g : graphs) {
    for (int f : {1, 2}) {
      const auto exact = eft_greedy_exact(g, 2, 2 * k, f);
      const auto fast = eft_modified_greedy(g, k, f);
      std::size_t run_exact = 0, run_fast = 0;
      for (const auto& w : exact.blocking.witnesses) run_exact = std::max(run_exact, w.size());
      for (const auto& w : fast.blocking.witnesses) run_fast = std::max(run_fast, w.size());
      const bool exact_ok =
          run_exact <= static_cast<std::size_t>(f) &&
          verify_blocking_set(g, exact.spanner.added_paths, exact.blocking, 2 * k, f);
      const bool fast_ok =
          run_fast <= static_cast<std::size_t>(2 * k * f) &&
          verify_blocking_set(g, fast.spanner.added_paths, fast.blocking, 2 * k, 2 * k * f);
      passed += (exact_ok ? 1 : 0) + (fast_ok ? 1 : 0);
      runs += 2;
      max_exact = std::max(max_exact, run_exact);
      max_fast = std::max(max_fast, run_fast);
    }
  }
  o.pass = passed == runs;
  Detail d;
  d << passed << "/" << runs << " records, max |F_i| exact=" << max_exact << " fast=" << max_fast;
  o.detail = d.str();
  return o;
}

Outcome sqrt_k_contract() {
  Outcome o;
  int passed = 0, runs = 0;
  for (int k : {4, 9}) {
    const auto stretch = sqrt_k_stretch(k);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const std::size_t n = 20 + seed * 3;
      const Multigraph g = gen_random(n, 3.0 / static_cast<double>(n), 70 + seed, false).graph;
      const auto res = sqrt_k_spanner(g, k);
      passed += verify_dr(g, res.edges, stretch.d, stretch.r).pass ? 1 : 0;
      ++runs;
    }
  }
  o.pass = passed == runs;
  o.detail = std::to_string(passed) + "/" + std::to_string(runs) +
             " instances (d,r)=(2,28),(3,66)";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "big-clique reproduction", 1, big_clique},
      {2, "hypercube reproduction", 1, hypercube},
      {3, "2->2k correctness", 30, two_to_2k_correctness},
      {4, "2->2k size trend", 120, two_to_2k_size_trend},
      {5, "parallel greedy bounds", 30, parallel_bounds},
      {6, "greedy clustering girth", 10, clustering_girth},
      {7, "neighborhood exchange", 10, neighborhood_exchange},
      {8, "weighted optimal instance", 30, weighted_optimal_instance},
      {9, "weighted stretch contract", 120, weighted_stretch},
      {10, "EFT exhaustive contract", 120, eft_contract},
      {11, "EFT lower-bound reproduction", 60, eft_lower_bound},
      {12, "linear-in-f size trend", 180, linear_in_f},
      {13, "(k,k-1) union contracts", 120, union_contracts},
      {14, "blocking-set audit", 30, blocking_audit},
      {15, "sqrt(k) spanner contract", 60, sqrt_k_contract},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& err) {
      outcome = Outcome{false, std::string("exception: ") + err.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = outcome.pass && in_time;
    failures += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof(timing), "%.2fs / %.0fs", seconds, c.limit_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << " (" << timing
              << ")" << (in_time ? "" : " TIME LIMIT EXCEEDED") << "  " << outcome.detail
              << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
