#pragma once

#include <cstdint>

#include "eop/graph.hpp"

namespace eop {

/// Intersection graph of n unit-length intervals with seeded left endpoints.
/// density in [0, 1] rescales the endpoint spread (1 gives a complete graph);
/// gaps are closed so the result is connected. Always proper interval.
Graph gen_proper_interval(int n, double density, uint64_t seed);

/// Random tree of cliques: each new block is a clique of size 2..max_block_size
/// glued at a uniformly chosen existing vertex. Connected block graph; with
/// max_block_size == 2 this is a uniform-attachment tree with n_blocks edges.
Graph gen_block(int n_blocks, int max_block_size, uint64_t seed);

/// Complete graph on k_size clique vertices, s_size independent vertices, and
/// each clique/independent pair joined independently with probability p.
/// Always split; may be disconnected.
Graph gen_split(int k_size, int s_size, double p, uint64_t seed);

}  // namespace eop
