#pragma once

#include <map>

#include "eop/graph.hpp"
#include "eop/recognition.hpp"

namespace eop {

/// Neighborhood counts of a split partition: l[i] is the number of
/// independent-set neighbors of clique[i]; lpair holds, for each unordered
/// clique pair with at least one common independent neighbor, that count
/// (pairs absent from the map have count 0).
struct SplitStats {
  std::vector<int> l;
  std::map<std::pair<VertexId, VertexId>, int> lpair;
};

/// Throws std::invalid_argument when p is not a clique / independent-set
/// partition of g.
SplitStats compute_stats(const Graph& g, const SplitPartition& p);

/// Maximum edge open packing of a split graph whose clique side has maximum
/// size. The witness is a single star centered in the clique. Throws
/// std::invalid_argument on an invalid partition (including an independent
/// vertex adjacent to the whole clique, which would contradict maximality).
EOPSolution solve_split(const Graph& g, const SplitPartition& p);

}  // namespace eop
