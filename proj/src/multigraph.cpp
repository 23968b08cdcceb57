#include "spanner/multigraph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spanner {

Multigraph::Multigraph(std::size_t n, bool weighted) : weighted_(weighted), adjacency_(n) {}

void Multigraph::check_vertex(Vertex v) const {
  if (v >= adjacency_.size()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(adjacency_.size()) + ")");
  }
}

EdgeId Multigraph::add_edge(Vertex u, Vertex v, double weight) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  if (!std::isfinite(weight) || weight <= 0.0) {
    throw std::invalid_argument("edge weight must be finite and positive");
  }
  if (!weighted_ && weight != 1.0) {
    throw std::invalid_argument("unweighted graph requires unit edge weights");
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{id, u, v, weight});
  auto insert_sorted = [](std::vector<Incidence>& list, Incidence inc) {
    list.insert(std::upper_bound(list.begin(), list.end(), inc), inc);
  };
  insert_sorted(adjacency_[u], Incidence{v, id});
  insert_sorted(adjacency_[v], Incidence{u, id});
  return id;
}

std::vector<EdgeId> Multigraph::edges_between(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  std::vector<EdgeId> out;
  const auto& list = adjacency_[u];
  auto it = std::lower_bound(list.begin(), list.end(), Incidence{v, 0});
  for (; it != list.end() && it->neighbor == v; ++it) {
    out.push_back(it->edge);
  }
  return out;
}

bool Multigraph::is_simple() const {
  for (const auto& list : adjacency_) {
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i].neighbor == list[i - 1].neighbor) return false;
    }
  }
  return true;
}

}  // namespace spanner
