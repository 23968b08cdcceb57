#include "spanner/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <tuple>

namespace spanner {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

constexpr std::string_view kMagic = "spanner-graph";

std::vector<std::string> split(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

template <typename T>
std::optional<T> parse_number(std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

struct Header {
  std::size_t n = 0;
  bool weighted = false;
  bool multigraph = false;
};

Header parse_header(const std::string& line, std::size_t line_no) {
  const auto tokens = split(line);
  if (tokens.size() != 6 || tokens[0] != "#" || tokens[1] != kMagic || tokens[2] != "v1") {
    throw ParseError(line_no,
                     "expected header '# spanner-graph v1 n=<int> weighted=<0|1> multigraph=<0|1>'");
  }
  auto field = [&](const std::string& token, std::string_view key) -> std::string_view {
    if (token.size() <= key.size() + 1 || token.compare(0, key.size(), key) != 0 ||
        token[key.size()] != '=') {
      throw ParseError(line_no, "expected header field '" + std::string(key) + "='");
    }
    return std::string_view(token).substr(key.size() + 1);
  };
  auto flag = [&](std::string_view value, std::string_view key) {
    if (value == "0") return false;
    if (value == "1") return true;
    throw ParseError(line_no, std::string(key) + " must be 0 or 1");
  };
  Header header;
  const auto n = parse_number<std::size_t>(field(tokens[3], "n"));
  if (!n) throw ParseError(line_no, "n must be a nonnegative integer");
  header.n = *n;
  header.weighted = flag(field(tokens[4], "weighted"), "weighted");
  header.multigraph = flag(field(tokens[5], "multigraph"), "multigraph");
  return header;
}

std::string format_weight(double w) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), w);
  return std::string(buffer, ptr);
}

}  // namespace

Multigraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<Header> header;
  while (!header && std::getline(in, line)) {
    ++line_no;
    if (split(line).empty()) continue;
    header = parse_header(line, line_no);
  }
  if (!header) throw ParseError(0, "missing header line");
  Multigraph g(header->n, header->weighted);
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    const std::size_t expected = header->weighted ? 3 : 2;
    if (tokens.size() != expected) {
      throw ParseError(line_no, "expected " + std::to_string(expected) + " fields, got " +
                                    std::to_string(tokens.size()));
    }
    const auto u = parse_number<Vertex>(tokens[0]);
    const auto v = parse_number<Vertex>(tokens[1]);
    if (!u || !v) throw ParseError(line_no, "vertex ids must be nonnegative integers");
    if (*u >= header->n || *v >= header->n) {
      throw ParseError(line_no, "vertex id out of range [0, " + std::to_string(header->n) + ")");
    }
    if (*u == *v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(*u));
    double w = 1.0;
    if (header->weighted) {
      const auto parsed = parse_number<double>(tokens[2]);
      if (!parsed || !std::isfinite(*parsed) || *parsed <= 0.0) {
        throw ParseError(line_no, "weight must be a positive decimal");
      }
      w = *parsed;
    }
    if (!header->multigraph && !g.edges_between(*u, *v).empty()) {
      throw ParseError(line_no, "parallel edge in a file declared multigraph=0");
    }
    g.add_edge(*u, *v, w);
  }
  return g;
}

Multigraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Multigraph& g) {
  out << "# " << kMagic << " v1 n=" << g.num_vertices() << " weighted=" << (g.weighted() ? 1 : 0)
      << " multigraph=" << (g.is_simple() ? 0 : 1) << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (g.weighted()) out << ' ' << format_weight(e.weight);
    out << '\n';
  }
}

void write_graph_file(const std::string& path, const Multigraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_graph(out, g);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Multigraph edge_subgraph(const Multigraph& g, std::span<const EdgeId> ids) {
  std::vector<EdgeId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Multigraph h(g.num_vertices(), g.weighted());
  for (EdgeId e : sorted) {
    const Edge& edge = g.edge(e);
    h.add_edge(edge.u, edge.v, edge.weight);
  }
  return h;
}

std::vector<EdgeId> match_subgraph(const Multigraph& g, const Multigraph& h) {
  if (g.num_vertices() != h.num_vertices()) {
    throw std::invalid_argument("spanner has " + std::to_string(h.num_vertices()) +
                                " vertices, graph has " + std::to_string(g.num_vertices()));
  }
  using Key = std::tuple<Vertex, Vertex, double>;
  std::map<Key, std::vector<EdgeId>> pool;  // ids descending, so back() is the lowest
  for (auto it = g.edges().rbegin(); it != g.edges().rend(); ++it) {
    pool[{std::min(it->u, it->v), std::max(it->u, it->v), it->weight}].push_back(it->id);
  }
  std::vector<EdgeId> ids;
  for (const Edge& e : h.edges()) {
    auto found = pool.find({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
    if (found == pool.end() || found->second.empty()) {
      throw std::invalid_argument("spanner edge " + std::to_string(e.id) + " (" +
                                  std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") has no matching graph edge");
    }
    ids.push_back(found->second.back());
    found->second.pop_back();
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace spanner
