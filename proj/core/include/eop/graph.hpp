#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace eop {

using VertexId = int;
using EdgeId = int;

/// Undirected edge with endpoints normalized so that u < v.
struct Edge {
  VertexId u = -1;
  VertexId v = -1;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph. Vertices are dense 0-based indices.
/// Edges carry stable ids assigned in input order; duplicate input pairs
/// collapse onto the first occurrence, self-loops are rejected.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on out-of-range endpoints or self-loops.
  static Graph build(int vertex_count, std::span<const std::pair<int, int>> pairs);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  Edge edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Neighbors of v in ascending order.
  std::span<const VertexId> neighbors(VertexId v) const;
  /// Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(VertexId v) const;

  int degree(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;
  std::optional<EdgeId> edge_id(VertexId u, VertexId v) const;

  /// Minimum/maximum degree; both 0 when the graph has no vertices.
  int min_degree() const;
  int max_degree() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;      // CSR offsets, size n_+1
  std::vector<VertexId> adj_;     // neighbor lists, ascending per vertex
  std::vector<EdgeId> adj_edge_;  // edge ids, parallel to adj_
};

/// Subset of the edges of one particular graph, as sorted unique edge ids.
struct EdgeSet {
  std::vector<EdgeId> ids;

  static EdgeSet of(std::vector<EdgeId> unsorted);
  int size() const { return static_cast<int>(ids.size()); }
  bool contains(EdgeId e) const;
  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
};

/// An edge open packing number together with an edge set attaining it.
struct EOPSolution {
  int value = 0;
  EdgeSet witness;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> to_sub;   // per original vertex; -1 when outside
  std::vector<VertexId> to_orig;  // per subgraph vertex
};

/// Subgraph induced by a vertex subset; vertices are renumbered in ascending
/// original order. Throws std::invalid_argument on out-of-range ids.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

struct ComponentLabeling {
  std::vector<int> component_id;  // per vertex
  int component_count = 0;
};

ComponentLabeling connected_components(const Graph& g);

/// An edge distinct from e1 and e2 joining an endpoint of e1 to an endpoint
/// of e2, if one exists. Such an edge forbids {e1, e2} from lying in a common
/// edge open packing set.
std::optional<EdgeId> find_common_edge(const Graph& g, EdgeId e1, EdgeId e2);

struct EopViolation {
  EdgeId e1 = -1;
  EdgeId e2 = -1;
  EdgeId common = -1;
};

/// First violating triple under (e1, e2) id order, or nullopt when d is an
/// edge open packing set. Throws std::invalid_argument when d contains ids
/// outside the graph or duplicates.
std::optional<EopViolation> find_eop_violation(const Graph& g, const EdgeSet& d);

bool is_eop_set(const Graph& g, const EdgeSet& d);

/// floor(|E| / delta); nullopt when the minimum degree is zero (or n == 0).
std::optional<long long> eop_upper_bound(const Graph& g);

}  // namespace eop
