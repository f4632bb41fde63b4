#include "eop/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace eop {
namespace {

struct SearchState {
  SearchState(const std::vector<uint64_t>& conflict_masks, const std::vector<int>& processing_order)
      : conflict(conflict_masks), order(processing_order) {}

  const std::vector<uint64_t>& conflict;  // per edge: mask of incompatible edges
  const std::vector<int>& order;          // processing order (indices into edges)
  long long nodes = 0;
  long long node_cap = 0;
  int best_value = 0;
  std::vector<int> best_set;  // edge ids
  std::vector<int> current;   // edge ids along the current branch
};

// Include-first depth-first search. With strict_improvement the subtree is cut
// unless it can strictly beat best_value, and the first completed set of size
// best_value ends the pass (used to extract the lexicographically least
// optimal witness when edges are processed in ascending id order).
bool search(SearchState& st, int idx, uint64_t chosen_mask, bool strict_improvement) {
  if (++st.nodes > st.node_cap) {
    EOPSolution partial;
    partial.value = st.best_value;
    partial.witness = EdgeSet::of(st.best_set);
    throw BudgetExceeded(std::move(partial));
  }
  const int m = static_cast<int>(st.order.size());
  const int have = static_cast<int>(st.current.size());
  if (strict_improvement && have == st.best_value) {
    st.best_set = st.current;
    return true;
  }
  if (idx == m) {
    if (have > st.best_value) {
      st.best_value = have;
      st.best_set = st.current;
    }
    return false;
  }
  const int remaining = m - idx;
  if (strict_improvement) {
    if (have + remaining < st.best_value) return false;
  } else {
    if (have + remaining <= st.best_value) return false;
  }

  const int e = st.order[static_cast<size_t>(idx)];
  if ((st.conflict[static_cast<size_t>(e)] & chosen_mask) == 0) {
    st.current.push_back(e);
    if (search(st, idx + 1, chosen_mask | (uint64_t{1} << e), strict_improvement)) return true;
    st.current.pop_back();
  }
  return search(st, idx + 1, chosen_mask, strict_improvement);
}

}  // namespace

EOPSolution brute_force_eop(const Graph& g, const SearchBudget& budget) {
  const int m = g.edge_count();
  if (budget.max_edges <= 0 || budget.max_nodes <= 0)
    throw std::invalid_argument("search budget caps must be positive");
  if (budget.max_edges > 64) throw std::invalid_argument("edge cap above 64 is not supported");
  if (m > budget.max_edges) throw std::invalid_argument("graph exceeds the oracle edge cap");
  if (m == 0) return EOPSolution{};

  std::vector<uint64_t> conflict(static_cast<size_t>(m), 0);
  for (EdgeId a = 0; a < m; ++a)
    for (EdgeId b = a + 1; b < m; ++b)
      if (find_common_edge(g, a, b)) {
        conflict[static_cast<size_t>(a)] |= uint64_t{1} << b;
        conflict[static_cast<size_t>(b)] |= uint64_t{1} << a;
      }

  // Pass 1: find the optimum value, branching on edges with large endpoint
  // degree sums first.
  std::vector<int> order(static_cast<size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> degsum(static_cast<size_t>(m));
  for (EdgeId e = 0; e < m; ++e)
    degsum[static_cast<size_t>(e)] = g.degree(g.edge(e).u) + g.degree(g.edge(e).v);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return degsum[static_cast<size_t>(a)] != degsum[static_cast<size_t>(b)]
               ? degsum[static_cast<size_t>(a)] > degsum[static_cast<size_t>(b)]
               : a < b;
  });

  SearchState st{conflict, order};
  st.node_cap = budget.max_nodes;
  search(st, 0, 0, false);
  const int value = st.best_value;

  // Pass 2: rerun in ascending edge-id order, include-first; the first set
  // reaching the optimum is the lexicographically least optimal witness.
  std::vector<int> id_order(static_cast<size_t>(m));
  std::iota(id_order.begin(), id_order.end(), 0);
  SearchState st2{conflict, id_order};
  st2.node_cap = budget.max_nodes - st.nodes;
  st2.best_value = value;
  st2.best_set = st.best_set;
  st2.current.clear();
  if (value > 0) search(st2, 0, 0, true);

  EOPSolution out;
  out.value = value;
  out.witness = EdgeSet::of(st2.best_set);
  return out;
}

}  // namespace eop
