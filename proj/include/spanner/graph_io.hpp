#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spanner/multigraph.hpp"

namespace spanner {

/// Malformed graph text. line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads the edge-list format:
///
///   # spanner-graph v1 n=<int> weighted=<0|1> multigraph=<0|1>
///   u v [w]
///
/// Blank lines and other '#' lines are skipped and do not consume edge
/// ids. Edge ids follow the order of the edge lines.
Multigraph parse_graph(std::istream& in);
Multigraph parse_graph_file(const std::string& path);

/// Writes `g` in the same format; weights use the shortest round-trip
/// decimal form and the multigraph flag is set iff g has parallel edges.
void write_graph(std::ostream& out, const Multigraph& g);
void write_graph_file(const std::string& path, const Multigraph& g);

/// The subgraph of `g` formed by `ids` (ascending), over the same vertices.
Multigraph edge_subgraph(const Multigraph& g, std::span<const EdgeId> ids);

/// Maps each edge of `h` to a distinct edge of `g` with the same endpoints
/// and weight, taking the lowest unused id each time. Throws
/// std::invalid_argument when h is not a subgraph of g.
std::vector<EdgeId> match_subgraph(const Multigraph& g, const Multigraph& h);

}  // namespace spanner
