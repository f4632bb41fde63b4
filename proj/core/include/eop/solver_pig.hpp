#pragma once

#include "eop/graph.hpp"
#include "eop/recognition.hpp"

namespace eop {

/// Decision taken at the front of a suffix of the ordering.
///   SkipFront : leave the front vertex unsaturated, continue at t+1.
///   TakeOne   : take edge (t, j) with nothing else at j past the front
///               clique, continue after j's last neighbor.
///   TakeTwo   : take edges (t, j) and (j, p), continue after p's last
///               neighbor.
/// All fields are positions in the ordering.
struct PigChoice {
  enum class Kind : unsigned char { None, SkipFront, TakeOne, TakeTwo };
  Kind kind = Kind::None;
  int j = -1;
  int p = -1;
};

/// rho[t] is the edge open packing number of the subgraph induced by the
/// ordering positions t..n-1 (rho[n] = 0); choice[t] records how rho[t] was
/// attained, preferring TakeTwo over TakeOne over SkipFront at equal value,
/// then the smallest (j, p).
struct SuffixTable {
  std::vector<int> rho;
  std::vector<PigChoice> choice;
};

/// Fills the table back to front. Requires a valid bi-compatible ordering
/// (last-neighbor data is recomputed, not trusted).
SuffixTable compute_suffix_table(const Graph& g, const BCOrdering& o);

/// Value of the suffix starting at position t (0 <= t <= n).
int suffix_value(const SuffixTable& table, int t);

/// Edge set realizing rho[0], replayed from the choice records; its size
/// equals rho[0] and it passes is_eop_set.
EdgeSet reconstruct_witness(const SuffixTable& table, const Graph& g, const BCOrdering& o);

/// Maximum edge open packing of a proper interval graph. Throws
/// std::invalid_argument unless validate_bco(g, o) holds.
EOPSolution solve_pig(const Graph& g, const BCOrdering& o);

}  // namespace eop
