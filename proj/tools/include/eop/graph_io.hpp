#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "eop/graph.hpp"

namespace eop::io {

enum class GraphFormat { EdgeList, Dimacs };

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// EdgeList: header "n m", then m lines "u v" with 0-based endpoints.
/// Dimacs: "c" comments, one "p edge n m" line, then m lines "e u v" with
/// 1-based endpoints. '#' comment lines and blank lines are skipped in the
/// edge-list format. Out-of-range endpoints and self-loops are rejected with
/// the offending line number.
Graph parse_graph(std::istream& in, GraphFormat format);

/// Canonical output: 0-based endpoints, edges sorted by (u, v).
void serialize_graph(const Graph& g, std::ostream& out, GraphFormat format = GraphFormat::EdgeList);

/// Edge set as lines "u v" against an existing graph; '#' comments and blank
/// lines are skipped. Lines naming non-edges are rejected.
EdgeSet parse_edge_set(std::istream& in, const Graph& g);

}  // namespace eop::io
