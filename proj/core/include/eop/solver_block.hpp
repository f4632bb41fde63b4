#pragma once

#include "eop/graph.hpp"
#include "eop/recognition.hpp"

namespace eop {

/// Per-vertex packing values of the branch hanging at a cut vertex v
/// (every entry is 0 for non-cut vertices):
///   rho_o  : unconstrained optimum of the branch,
///   rho_c  : optimum with v the center of a star of the packing,
///   rho_l  : optimum with v a leaf of a star of the packing,
///   rho_p  : optimum with v unsaturated,
///   rho_pp : optimum with v's closed neighborhood unsaturated.
struct NodeLabels {
  std::vector<int> rho_o, rho_c, rho_l, rho_p, rho_pp;
};

/// Scores of one child block B relative to its parent cut vertex v.
///   a / a_arg   : best branch value when the packing uses an edge of B and v
///                 centers a star (a_arg is the chosen leaf in B),
///   abar        : branch value when no edge of B is used and every child cut
///                 vertex of B stays unsaturated,
///   type1       : a >= abar,
///   m / m_arg   : best branch value when v is a star leaf whose center m_arg
///                 lies in B; m_center tells whether the center descends into
///                 its own star case rather than the isolated-neighborhood
///                 case.
struct BlockScores {
  int a = 0;
  int abar = 0;
  bool type1 = true;
  VertexId a_arg = -1;
  int m = 0;
  VertexId m_arg = -1;
  bool m_center = false;
};

/// How the optimum of the branch below (parent cut vertex, block) is
/// attained: either no edge of the block's top clique is used (at most one
/// child branch, open_w, may saturate its attachment vertex), or one clique
/// edge (x, y) is used with at most one side extending a star into its own
/// branch.
struct GvbChoice {
  enum class Kind : unsigned char { None, NoBlockEdge, BlockEdge };
  Kind kind = Kind::None;
  VertexId open_w = -1;
  VertexId x = -1, y = -1;
  bool x_center = false, y_center = false;
};

/// Bottom-up labels for every cut vertex plus per-block scores and branch
/// solutions, computed in one pass over cut vertices in decreasing depth.
struct BlockAnalysis {
  NodeLabels labels;
  std::vector<BlockScores> scores;    // per block
  std::vector<int> gvb_value;         // per block: optimum of the branch below it
  std::vector<GvbChoice> gvb_choice;  // per block
  std::vector<int> c_forced_block;    // per vertex: block forced to supply the
                                      // star edge when no child is type 1 (-1 otherwise)
  std::vector<int> l_best_block;      // per vertex: block attaining rho_l
};

BlockAnalysis analyze_block_graph(const Graph& g, const CutTree& t);

/// Maximum edge open packing of a connected block graph given its rooted cut
/// tree. Throws std::invalid_argument when the tree does not match the graph.
EOPSolution solve_block(const Graph& g, const CutTree& t);

/// Branch below (v, block_id) solved from scratch: the branch vertex set is
/// extracted, solved as an independent block graph, and the witness mapped
/// back to the original edge ids. Agrees with gvb_value[block_id].
EOPSolution solve_gvb(const Graph& g, const CutTree& t, VertexId v, int block_id);

}  // namespace eop
