// Command-line front end: instance generation, spanner construction,
// contract verification and size statistics.

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spanner/distance.hpp"
#include "spanner/fault_tolerant.hpp"
#include "spanner/generators.hpp"
#include "spanner/graph_io.hpp"
#include "spanner/greedy_spanners.hpp"
#include "spanner/verify.hpp"
#include "spanner/weighted_spanner.hpp"

namespace {

using namespace spanner;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitIo = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename T>
void require(const std::optional<T>& value, const std::string& flag, const std::string& what) {
  if (!value) throw UsageError(what + " requires " + flag);
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  std::string family;
  std::optional<int> t;
  std::optional<int> k;
  std::optional<int> f;
  std::optional<std::size_t> n;
  std::optional<double> p;
  std::optional<double> eps;
  std::optional<std::string> base;
  std::uint64_t seed = 1;
  bool weighted = false;
  int max_mult = 1;
  std::string output;
  std::string paths_output;
};

void write_paths(const std::string& path, const PathCollection& coll) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << "# spanner-paths v1 n=" << coll.n << '\n';
  for (const PathSeq& p : coll.paths) {
    out << p.vertices.front();
    for (EdgeId e : p.edges) out << ' ' << e;
    out << '\n';
  }
}

PathCollection read_paths(const std::string& path, const Multigraph& g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  PathCollection coll{g.num_vertices(), {}};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    Vertex start = 0;
    std::vector<EdgeId> edges;
    if (!(fields >> start)) throw ParseError(line_no, "expected a start vertex");
    for (EdgeId e; fields >> e;) edges.push_back(e);
    if (!fields.eof()) throw ParseError(line_no, "malformed edge id");
    try {
      for (EdgeId e : edges) {
        if (e >= g.num_edges()) throw std::invalid_argument("edge id out of range");
      }
      coll.paths.push_back(PathSeq::from_edges(g, start, edges));
    } catch (const std::invalid_argument& err) {
      throw ParseError(line_no, err.what());
    }
  }
  return coll;
}

int run_gen(const GenOptions& o) {
  InstanceBundle bundle;
  const std::string& fam = o.family;
  if (fam == "big-clique") {
    require(o.t, "-t", fam);
    bundle = gen_big_clique(*o.t);
  } else if (fam == "hypercube") {
    require(o.k, "-k", fam);
    bundle = gen_hypercube(*o.k);
  } else if (fam == "weighted-lb") {
    require(o.k, "-k", fam);
    require(o.eps, "--eps", fam);
    bundle = gen_weighted_lower_bound(named_graph(o.base.value_or("c5")), *o.eps, *o.k);
  } else if (fam == "eft-lb") {
    require(o.f, "-f", fam);
    bundle = gen_eft_lower_bound(named_graph(o.base.value_or("c6")), *o.f);
  } else {
    require(o.n, "-n", fam);
    require(o.p, "-p", fam);
    bundle = o.max_mult > 1 ? gen_random_multigraph(*o.n, *o.p, o.max_mult, o.seed)
                            : gen_random(*o.n, *o.p, o.seed, o.weighted);
  }
  write_graph_file(o.output, bundle.graph);
  if (!o.paths_output.empty()) {
    if (!bundle.paths) throw UsageError("--paths is only available for big-clique");
    write_paths(o.paths_output, *bundle.paths);
  }
  std::cout << bundle.provenance << ": n=" << bundle.graph.num_vertices()
            << " m=" << bundle.graph.num_edges() << '\n';
  return kExitPass;
}

// ---------------------------------------------------------------- span

struct SpanOptions {
  std::string algo;
  std::optional<int> k;
  std::optional<int> d;
  std::optional<int> r;
  int f = 0;
  std::string input;
  std::string output;
  std::string trace;
  std::string paths;
};

json path_record(const PathSeq& p, std::size_t index) {
  return json{{"kind", "path"}, {"index", index}, {"vertices", p.vertices}, {"edges", p.edges}};
}

void emit_paths(std::vector<json>& trace, const SpannerResult& r) {
  for (std::size_t i = 0; i < r.added_paths.size(); ++i) {
    trace.push_back(path_record(r.added_paths[i], i));
  }
}

void emit_blocking(std::vector<json>& trace, const SpannerResult& r, const BlockingRecord& b) {
  for (std::size_t i = 0; i < r.added_paths.size(); ++i) {
    json rec = path_record(r.added_paths[i], i);
    rec["witness"] = b.witnesses[i];
    trace.push_back(std::move(rec));
  }
}

std::string lateral_name(LateralVerdict v) {
  switch (v) {
    case LateralVerdict::kAdded: return "added";
    case LateralVerdict::kSaturatedCandidate: return "saturated-candidate";
    case LateralVerdict::kRoughlyContained: return "roughly-contained";
  }
  return "?";
}

std::string reduction_name(ReductionVerdict v) {
  switch (v) {
    case ReductionVerdict::kNearby: return "nearby";
    case ReductionVerdict::kAdded: return "added";
    case ReductionVerdict::kRoughlyCloseClusters: return "roughly-close-clusters";
  }
  return "?";
}

void emit_weighted(std::vector<json>& trace, const WeightedSpannerResult& w) {
  for (std::size_t p = 0; p < w.phase.size(); ++p) {
    trace.push_back(json{{"kind", "phase"}, {"phase", p + 1}, {"edges", w.phase[p]}});
  }
  std::vector<EdgeId> saturated;
  for (EdgeId e = 0; e < w.saturation.saturated.size(); ++e) {
    if (w.saturation.is_saturated(e)) saturated.push_back(e);
  }
  trace.push_back(json{{"kind", "saturated"}, {"edges", saturated}});
  for (const LateralStep& s : w.lateral) {
    trace.push_back(json{{"kind", "lateral"},
                         {"v", s.v},
                         {"u", s.u},
                         {"edge", s.edge},
                         {"key", s.key},
                         {"verdict", lateral_name(s.verdict)}});
  }
  for (const ReductionStep& s : w.reduction) {
    if (s.verdict == ReductionVerdict::kNearby) continue;
    trace.push_back(json{{"kind", "reduction"},
                         {"edge", s.edge},
                         {"pairs", {s.pairs_forward, s.pairs_backward}},
                         {"verdict", reduction_name(s.verdict)}});
  }
  for (const RepairStep& s : w.repairs) {
    trace.push_back(json{{"kind", "repair"},
                         {"path", {s.x, s.m, s.y}},
                         {"sat", s.sat},
                         {"lat", s.lat},
                         {"key", s.key},
                         {"added", s.added}});
  }
}

int run_span(const SpanOptions& o) {
  const Multigraph g = parse_graph_file(o.input);
  std::vector<json> trace;
  std::vector<EdgeId> edges;
  const std::string& algo = o.algo;
  if (algo == "greedy-dr") {
    require(o.d, "-d", algo);
    require(o.r, "-r", algo);
    const auto r = greedy_dr_spanner(g, *o.d, *o.r);
    emit_paths(trace, r);
    edges = r.edges;
  } else if (algo == "path-collection") {
    require(o.r, "-r", algo);
    if (o.paths.empty()) throw UsageError("path-collection requires --paths");
    const auto r = greedy_path_collection_spanner(g, read_paths(o.paths, g), *o.r);
    emit_paths(trace, r);
    edges = r.edges;
  } else if (algo == "weighted") {
    require(o.k, "-k", algo);
    const auto w = build_weighted_spanner(g, *o.k);
    emit_weighted(trace, w);
    edges = w.edges;
  } else {
    require(o.k, "-k", algo);
    const int k = *o.k;
    if (algo == "parallel") {
      const auto matchings = greedy_matching_decomposition(g);
      const auto r = parallel_greedy_spanner(g, k, matchings);
      emit_paths(trace, r);
      for (const BoostRecord& b : r.boosts) {
        trace.push_back(json{{"kind", "boost"},
                             {"edge", b.edge},
                             {"tail", b.tail},
                             {"head", b.head},
                             {"round", b.round}});
      }
      edges = r.edges;
    } else if (algo == "sqrt-k") {
      const auto r = sqrt_k_spanner(g, k);
      emit_paths(trace, r);
      edges = r.edges;
    } else if (algo == "union") {
      const auto r = union_hybrid_spanner(g, k);
      emit_paths(trace, r);
      edges = r.edges;
    } else if (algo == "eft-exact") {
      const int d = o.d.value_or(2);
      const auto r = eft_greedy_exact(g, d, o.r.value_or(d == 1 ? 2 * k - 1 : 2 * k), o.f);
      emit_blocking(trace, r.spanner, r.blocking);
      edges = r.spanner.edges;
    } else if (algo == "eft-fast") {
      const auto r = eft_modified_greedy(g, k, o.f);
      emit_blocking(trace, r.spanner, r.blocking);
      edges = r.spanner.edges;
    } else {
      const auto r = eft_union_spanner(g, k, o.f);
      emit_paths(trace, r);
      edges = r.edges;
    }
  }
  trace.push_back(json{{"kind", "summary"}, {"algorithm", algo}, {"edges", edges.size()}});
  if (!o.output.empty()) write_graph_file(o.output, edge_subgraph(g, edges));
  if (!o.trace.empty()) {
    std::ofstream out(o.trace);
    if (!out) throw std::runtime_error("cannot open '" + o.trace + "' for writing");
    for (const json& rec : trace) out << rec.dump() << '\n';
  }
  std::cout << algo << ": n=" << g.num_vertices() << " m=" << g.num_edges()
            << " spanner_edges=" << edges.size() << '\n';
  return kExitPass;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string contract;
  std::string graph;
  std::string spanner;
  std::optional<int> d;
  std::optional<int> r;
  std::optional<int> k;
  std::optional<int> alpha;
  std::optional<int> beta;
  int f = 0;
  int max_hops = 6;
  std::size_t sample = 500;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget;
};

std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SPANNER_BUDGET")) {
    std::uint64_t value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw UsageError("SPANNER_BUDGET must be a nonnegative integer");
    }
    return value;
  }
  return kDefaultVerifyBudget;
}

std::string distance_text(int d) { return d == kBeyondCutoff ? "inf" : std::to_string(d); }

int report_result(const VerificationReport& report) {
  std::cout << "fault_sets=" << report.fault_sets << " pairs_checked=" << report.pairs_checked
            << '\n';
  if (report.pass) {
    std::cout << "PASS\n";
    return kExitPass;
  }
  const Counterexample& c = *report.counterexample;
  std::cout << "FAIL x=" << c.x << " y=" << c.y << " F={";
  for (std::size_t i = 0; i < c.faults.size(); ++i) std::cout << (i ? "," : "") << c.faults[i];
  std::cout << "} dist_G-F=" << distance_text(c.host_distance)
            << " dist_H-F=" << distance_text(c.measured) << " bound=" << c.bound << '\n';
  return kExitCounterexample;
}

int run_verify(const VerifyOptions& o) {
  const Multigraph g = parse_graph_file(o.graph);
  const Multigraph h = parse_graph_file(o.spanner);
  const auto ids = match_subgraph(g, h);
  const std::string& c = o.contract;
  if (c == "weighted") {
    require(o.k, "-k", c);
    const auto report = verify_weighted_bound(g, ids, *o.k, o.max_hops, o.sample, o.seed);
    std::cout << "paths_checked=" << report.paths_checked << " worst_ratio=" << report.worst_ratio
              << '\n';
    if (report.pass) {
      std::cout << "PASS\n";
      return kExitPass;
    }
    std::cout << "FAIL path=";
    for (std::size_t i = 0; i < report.worst_path->vertices.size(); ++i) {
      std::cout << (i ? "-" : "") << report.worst_path->vertices[i];
    }
    std::cout << " dist_H=" << report.worst_distance << " bound=" << report.worst_bound << '\n';
    return kExitCounterexample;
  }
  const std::uint64_t budget = resolve_budget(o.budget);
  try {
    if (c == "alpha-beta") {
      require(o.alpha, "--alpha", c);
      require(o.beta, "--beta", c);
      return report_result(verify_alpha_beta(g, ids, *o.alpha, *o.beta, o.f, budget));
    }
    require(o.d, "-d", c);
    require(o.r, "-r", c);
    if (c == "dr") return report_result(verify_dr(g, ids, *o.d, *o.r, budget));
    return report_result(verify_eft(g, ids, *o.d, *o.r, o.f, budget));
  } catch (const BudgetExceeded& e) {
    std::cout << "BUDGET required=" << e.required() << " budget=" << e.budget() << '\n';
    return kExitBudget;
  }
}

// ---------------------------------------------------------------- stats

int run_stats(const std::string& path, double k) {
  const Multigraph h = parse_graph_file(path);
  const auto size = size_report(h.num_edges(), h.num_vertices(), k);
  const int g = girth(SubgraphView::full(h));
  std::cout << "n=" << h.num_vertices() << " edges=" << h.num_edges() << " ratio=" << size.ratio
            << " girth=" << (g == kBeyondCutoff ? std::string("inf") : std::to_string(g)) << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph spanner construction and verification"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("family", gen.family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"big-clique", "hypercube", "weighted-lb", "eft-lb", "gnp"}));
  gen_cmd->add_option("-t", gen.t, "Clique size (big-clique)");
  gen_cmd->add_option("-k", gen.k, "Dimension (hypercube) or stretch parameter (weighted-lb)");
  gen_cmd->add_option("-f", gen.f, "Parallel copies per edge (eft-lb)");
  gen_cmd->add_option("-n", gen.n, "Vertex count (gnp)");
  gen_cmd->add_option("-p", gen.p, "Edge probability (gnp)");
  gen_cmd->add_option("--eps", gen.eps, "Leaf weight (weighted-lb)");
  gen_cmd->add_option("--base", gen.base, "Base graph: c<N>, k<N>, p<N>, petersen, heawood");
  gen_cmd->add_option("--seed", gen.seed, "Random seed (gnp)");
  gen_cmd->add_flag("--weighted", gen.weighted, "Draw weights in (0, 1] (gnp)");
  gen_cmd->add_option("--max-mult", gen.max_mult, "Maximum edge multiplicity (gnp)")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("-o,--output", gen.output, "Output graph file")->required();
  gen_cmd->add_option("--paths", gen.paths_output, "Output path-collection file (big-clique)");

  SpanOptions span;
  auto* span_cmd = app.add_subcommand("span", "Construct a spanner");
  span_cmd->add_option("algo", span.algo, "Algorithm")
      ->required()
      ->check(CLI::IsMember({"greedy-dr", "path-collection", "parallel", "sqrt-k", "union",
                             "weighted", "eft-exact", "eft-fast", "eft-union"}));
  span_cmd->add_option("-k", span.k, "Stretch parameter");
  span_cmd->add_option("-d", span.d, "Path length d");
  span_cmd->add_option("-r", span.r, "Stretch bound r");
  span_cmd->add_option("-f", span.f, "Fault budget")->check(CLI::NonNegativeNumber);
  span_cmd->add_option("-i,--input", span.input, "Input graph file")->required();
  span_cmd->add_option("-o,--output", span.output, "Output spanner file");
  span_cmd->add_option("--trace", span.trace, "JSON-lines provenance trace");
  span_cmd->add_option("--paths", span.paths, "Path-collection file (path-collection)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a spanner contract");
  verify_cmd->add_option("contract", verify.contract, "Contract")
      ->required()
      ->check(CLI::IsMember({"dr", "eft", "alpha-beta", "weighted"}));
  verify_cmd->add_option("-i,--input", verify.graph, "Host graph file")->required();
  verify_cmd->add_option("-s,--spanner", verify.spanner, "Spanner file")->required();
  verify_cmd->add_option("-d", verify.d, "Host distance d");
  verify_cmd->add_option("-r", verify.r, "Stretch bound r");
  verify_cmd->add_option("-f", verify.f, "Fault budget")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("-k", verify.k, "Stretch parameter (weighted)");
  verify_cmd->add_option("--alpha", verify.alpha, "Multiplicative stretch");
  verify_cmd->add_option("--beta", verify.beta, "Additive stretch");
  verify_cmd->add_option("--max-hops", verify.max_hops, "Longest sampled path (weighted)");
  verify_cmd->add_option("--sample", verify.sample, "Sampled paths (weighted)");
  verify_cmd->add_option("--seed", verify.seed, "Sampling seed (weighted)");
  verify_cmd->add_option("--budget", verify.budget, "Maximum (fault set, pair) checks");

  std::string stats_path;
  double stats_k = 2.0;
  auto* stats_cmd = app.add_subcommand("stats", "Report spanner size and girth");
  stats_cmd->add_option("-s,--spanner", stats_path, "Spanner file")->required();
  stats_cmd->add_option("-k", stats_k, "Size exponent parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*span_cmd) return run_span(span);
    if (*verify_cmd) return run_verify(verify);
    return run_stats(stats_path, stats_k);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}
