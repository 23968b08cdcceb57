#pragma once

#include <span>
#include <vector>

#include "spanner/multigraph.hpp"

namespace spanner {

/// A set of host edges, optionally restricted to edges of weight at most a
/// threshold. The host graph must outlive the view.
///
/// Construction algorithms keep a private SubgraphView as their working
/// spanner and grow it with insert(); everything handed to callers is a
/// value copy.
class SubgraphView {
 public:
  static SubgraphView full(const Multigraph& host);
  static SubgraphView empty(const Multigraph& host);

  SubgraphView(const Multigraph& host, std::span<const EdgeId> ids);

  const Multigraph& host() const { return *host_; }
  std::size_t num_vertices() const { return host_->num_vertices(); }

  /// True when the edge is included and passes the weight threshold.
  bool contains(EdgeId id) const {
    return included_[id] != 0 && host_->edge(id).weight <= threshold_;
  }

  void insert(EdgeId id);
  void erase(EdgeId id);

  /// Same included set, restricted to edges of weight <= omega.
  SubgraphView thresholded(double omega) const;
  double threshold() const { return threshold_; }

  /// Contained edge ids, ascending.
  std::vector<EdgeId> edge_ids() const;
  std::size_t size() const;

 private:
  explicit SubgraphView(const Multigraph& host);

  const Multigraph* host_;
  std::vector<char> included_;
  double threshold_;
};

}  // namespace spanner
