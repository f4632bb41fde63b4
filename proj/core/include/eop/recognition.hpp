#pragma once

#include <optional>
#include <vector>

#include "eop/graph.hpp"

namespace eop {

/// Vertex ordering that is a perfect elimination ordering in both directions
/// (exists exactly for proper interval graphs). order[i] is the vertex at
/// position i, position is the inverse permutation, and last_neighbor[i] is
/// the largest position >= i holding order[i] or one of its neighbors.
/// Components occupy contiguous position ranges.
struct BCOrdering {
  std::vector<VertexId> order;
  std::vector<int> position;
  std::vector<int> last_neighbor;
};

/// Perfect elimination ordering via maximum cardinality search, verified
/// before returning; nullopt when the graph is not chordal.
std::optional<std::vector<VertexId>> compute_peo(const Graph& g);

/// Standard simpliciality check: each vertex's later neighborhood must be a
/// clique, tested through the earliest later neighbor.
bool is_peo(const Graph& g, std::span<const VertexId> order);

/// Bi-compatible elimination ordering via repeated lexicographic BFS sweeps,
/// certified with validate_bco; nullopt when the graph is not proper interval.
std::optional<BCOrdering> compute_bco(const Graph& g);

/// True iff for every edge the two endpoints and all positions between them
/// induce a clique. Recomputes last-neighbor data from the graph; the stored
/// last_neighbor field is not trusted.
bool validate_bco(const Graph& g, const BCOrdering& o);

/// Rooted block/cut-vertex tree of a connected graph whose blocks are all
/// cliques. Blocks and cut vertices alternate; cc and cb are the children
/// maps of the rooted tree.
struct CutTree {
  std::vector<std::vector<VertexId>> blocks;  // each ascending
  std::vector<char> is_cut;                   // per vertex
  std::vector<VertexId> cut_vertices;         // ascending
  VertexId root = -1;                         // -1 when the graph has no cut vertex
  std::vector<std::vector<int>> blocks_at;    // per vertex: incident block ids
  std::vector<int> parent_block;              // per cut vertex: block above it (-1 at root)
  std::vector<VertexId> parent_cut;           // per block: cut vertex above it (-1 for a lone block)
  std::vector<std::vector<int>> cc;           // per cut vertex: child block ids
  std::vector<std::vector<VertexId>> cb;      // per block: child cut vertices
  std::vector<int> cut_depth;                 // per cut vertex: root distance in cut-vertex layers
};

/// Biconnected decomposition plus per-block clique certification. Roots at
/// root_hint when it is a cut vertex, otherwise at the smallest cut vertex.
/// Returns nullopt when some block is not a clique; throws
/// std::invalid_argument on disconnected input.
std::optional<CutTree> build_cut_tree(const Graph& g,
                                      std::optional<VertexId> root_hint = std::nullopt);

/// Clique / independent-set partition with |clique| equal to the clique
/// number of the graph.
struct SplitPartition {
  std::vector<VertexId> clique;       // ascending
  std::vector<VertexId> independent;  // ascending
};

/// Degree-sequence split test; on success the top-degree clique is promoted
/// to maximum size by absorbing at most one independent vertex adjacent to
/// the whole clique. Nullopt when the graph is not split.
std::optional<SplitPartition> split_partition(const Graph& g);

struct ClassTags {
  bool proper_interval = false;
  bool block = false;
  bool split = false;
  bool chordal = false;
  bool none() const { return !(proper_interval || block || split || chordal); }
};

/// Runs every recognizer; tags are independent of each other. Block-graph
/// membership is evaluated per connected component.
ClassTags classify(const Graph& g);

}  // namespace eop
