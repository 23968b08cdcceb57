#include "spanner/subgraph_view.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spanner {

SubgraphView::SubgraphView(const Multigraph& host)
    : host_(&host), included_(host.num_edges(), 0), threshold_(kInfiniteWeight) {}

SubgraphView SubgraphView::full(const Multigraph& host) {
  SubgraphView view(host);
  std::fill(view.included_.begin(), view.included_.end(), 1);
  return view;
}

SubgraphView SubgraphView::empty(const Multigraph& host) { return SubgraphView(host); }

SubgraphView::SubgraphView(const Multigraph& host, std::span<const EdgeId> ids)
    : SubgraphView(host) {
  for (EdgeId id : ids) insert(id);
}

void SubgraphView::insert(EdgeId id) {
  if (id >= included_.size()) {
    throw std::invalid_argument("edge id " + std::to_string(id) + " not in host graph");
  }
  included_[id] = 1;
}

void SubgraphView::erase(EdgeId id) {
  if (id >= included_.size()) {
    throw std::invalid_argument("edge id " + std::to_string(id) + " not in host graph");
  }
  included_[id] = 0;
}

SubgraphView SubgraphView::thresholded(double omega) const {
  SubgraphView view = *this;
  view.threshold_ = omega;
  return view;
}

std::vector<EdgeId> SubgraphView::edge_ids() const {
  std::vector<EdgeId> ids;
  for (EdgeId id = 0; id < included_.size(); ++id) {
    if (contains(id)) ids.push_back(id);
  }
  return ids;
}

std::size_t SubgraphView::size() const {
  std::size_t count = 0;
  for (EdgeId id = 0; id < included_.size(); ++id) count += contains(id) ? 1 : 0;
  return count;
}

}  // namespace spanner
