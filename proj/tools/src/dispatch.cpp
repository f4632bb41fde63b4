#include "eop/dispatch.hpp"

#include "eop/recognition.hpp"
#include "eop/solver_block.hpp"
#include "eop/solver_pig.hpp"
#include "eop/solver_split.hpp"

namespace eop::cli {
namespace {

std::optional<EOPSolution> try_pig(const Graph& g) {
  const auto bco = compute_bco(g);
  if (!bco) return std::nullopt;
  return solve_pig(g, *bco);
}

// Per-component cut trees; values add up and witnesses map back through the
// component subgraphs.
std::optional<EOPSolution> try_block(const Graph& g) {
  const ComponentLabeling comps = connected_components(g);
  std::vector<std::vector<VertexId>> members(static_cast<size_t>(comps.component_count));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    members[static_cast<size_t>(comps.component_id[static_cast<size_t>(v)])].push_back(v);

  EOPSolution total;
  std::vector<EdgeId> ids;
  for (const auto& verts : members) {
    const InducedSubgraph sub = induced_subgraph(g, verts);
    const auto tree = build_cut_tree(sub.graph);
    if (!tree) return std::nullopt;
    const EOPSolution part = solve_block(sub.graph, *tree);
    total.value += part.value;
    for (EdgeId e : part.witness.ids) {
      const Edge se = sub.graph.edge(e);
      ids.push_back(*g.edge_id(sub.to_orig[static_cast<size_t>(se.u)],
                               sub.to_orig[static_cast<size_t>(se.v)]));
    }
  }
  total.witness = EdgeSet::of(std::move(ids));
  return total;
}

std::optional<EOPSolution> try_split(const Graph& g) {
  const auto part = split_partition(g);
  if (!part) return std::nullopt;
  return solve_split(g, *part);
}

}  // namespace

std::optional<SolveOutcome> solve_dispatch(const Graph& g, SolverClass cls,
                                           const SearchBudget& budget) {
  switch (cls) {
    case SolverClass::Pig:
      if (auto s = try_pig(g)) return SolveOutcome{"proper_interval", std::move(*s)};
      return std::nullopt;
    case SolverClass::Block:
      if (auto s = try_block(g)) return SolveOutcome{"block", std::move(*s)};
      return std::nullopt;
    case SolverClass::Split:
      if (auto s = try_split(g)) return SolveOutcome{"split", std::move(*s)};
      return std::nullopt;
    case SolverClass::Brute:
      return SolveOutcome{"brute", brute_force_eop(g, budget)};
    case SolverClass::Auto:
      break;
  }
  if (auto s = try_pig(g)) return SolveOutcome{"proper_interval", std::move(*s)};
  if (auto s = try_block(g)) return SolveOutcome{"block", std::move(*s)};
  if (auto s = try_split(g)) return SolveOutcome{"split", std::move(*s)};
  if (g.edge_count() <= budget.max_edges)
    return SolveOutcome{"brute", brute_force_eop(g, budget)};
  return std::nullopt;
}

}  // namespace eop::cli
