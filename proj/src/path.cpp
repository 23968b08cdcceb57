#include "spanner/path.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spanner {

PathSeq PathSeq::from_edges(const Multigraph& g, Vertex start, std::span<const EdgeId> edges) {
  g.check_vertex(start);
  PathSeq p;
  p.vertices.push_back(start);
  Vertex at = start;
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    if (e.u != at && e.v != at) {
      throw std::invalid_argument("edge " + std::to_string(id) + " does not leave vertex " +
                                  std::to_string(at));
    }
    at = e.other(at);
    p.vertices.push_back(at);
    p.edges.push_back(id);
  }
  return p;
}

void validate_path(const Multigraph& g, const PathSeq& p) {
  if (p.vertices.size() != p.edges.size() + 1) {
    throw std::invalid_argument("path needs exactly one more vertex than edges");
  }
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (p.edges[i] >= g.num_edges()) {
      throw std::invalid_argument("path edge " + std::to_string(p.edges[i]) + " not in graph");
    }
    const Edge& e = g.edge(p.edges[i]);
    const Vertex a = p.vertices[i];
    const Vertex b = p.vertices[i + 1];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) {
      throw std::invalid_argument("path edge " + std::to_string(e.id) + " does not join " +
                                  std::to_string(a) + " and " + std::to_string(b));
    }
  }
}

namespace {

std::vector<double> weights_of(const Multigraph& g, const PathSeq& p) {
  std::vector<double> w;
  w.reserve(p.edges.size());
  for (EdgeId id : p.edges) w.push_back(g.edge(id).weight);
  return w;
}

}  // namespace

double path_weight(const Multigraph& g, const PathSeq& p) {
  double total = 0.0;
  for (EdgeId id : p.edges) total += g.edge(id).weight;
  return total;
}

double path_max_weight(const Multigraph& g, const PathSeq& p) {
  if (p.edges.empty()) throw std::invalid_argument("empty path has no max weight");
  const auto w = weights_of(g, p);
  return *std::max_element(w.begin(), w.end());
}

double path_min_weight(const Multigraph& g, const PathSeq& p) {
  if (p.edges.empty()) throw std::invalid_argument("empty path has no min weight");
  const auto w = weights_of(g, p);
  return *std::min_element(w.begin(), w.end());
}

double w_half(std::span<const double> weights) {
  if (weights.empty()) throw std::invalid_argument("w_half of an empty path");
  std::vector<double> sorted(weights.begin(), weights.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const std::size_t take = (sorted.size() + 1) / 2;
  return std::accumulate(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(take), 0.0);
}

double w_half(const Multigraph& g, const PathSeq& p) { return w_half(weights_of(g, p)); }

}  // namespace spanner
