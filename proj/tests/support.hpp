#pragma once

// Shared helpers for the test suites. The checkers here deliberately restate
// definitions from scratch (naked endpoint scans, full subset enumeration)
// so they stay independent of the library code paths they are used to judge.

#include <algorithm>
#include <utility>
#include <vector>

#include "eop/graph.hpp"
#include "eop/recognition.hpp"

namespace eop::test {

inline Graph make_graph(int n, std::vector<std::pair<int, int>> pairs) {
  return Graph::build(n, pairs);
}

inline Graph path(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph::build(n, pairs);
}

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return Graph::build(n, pairs);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return Graph::build(n, pairs);
}

inline Graph star(int leaves) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= leaves; ++i) pairs.emplace_back(0, i);
  return Graph::build(leaves + 1, pairs);
}

// Literal definition: some edge e outside {e1, e2} joins an endpoint of e1 to
// an endpoint of e2.
inline bool edges_conflict_literal(const Graph& g, EdgeId e1, EdgeId e2) {
  const Edge a = g.edge(e1);
  const Edge b = g.edge(e2);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e == e1 || e == e2) continue;
    const Edge c = g.edge(e);
    const bool touches_a = c.u == a.u || c.u == a.v || c.v == a.u || c.v == a.v;
    const bool touches_b = c.u == b.u || c.u == b.v || c.v == b.u || c.v == b.v;
    if (!touches_a || !touches_b) continue;
    // One endpoint on each side.
    if (((c.u == a.u || c.u == a.v) && (c.v == b.u || c.v == b.v)) ||
        ((c.v == a.u || c.v == a.v) && (c.u == b.u || c.u == b.v)))
      return true;
  }
  return false;
}

inline bool is_eop_set_literal(const Graph& g, const std::vector<EdgeId>& ids) {
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t j = i + 1; j < ids.size(); ++j)
      if (edges_conflict_literal(g, ids[i], ids[j])) return false;
  return true;
}

// Exhaustive maximum over all edge subsets; usable for m up to ~16.
inline int eop_number_by_enumeration(const Graph& g) {
  const int m = g.edge_count();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<EdgeId> ids;
    for (int e = 0; e < m; ++e)
      if (mask & (1u << e)) ids.push_back(e);
    if (static_cast<int>(ids.size()) > best && is_eop_set_literal(g, ids))
      best = static_cast<int>(ids.size());
  }
  return best;
}

// Every component of the subgraph induced by the witness endpoints must be a
// star: one vertex covering all of the component's edges.
inline bool witness_spans_disjoint_stars(const Graph& g, const EdgeSet& d) {
  std::vector<VertexId> verts;
  for (EdgeId e : d.ids) {
    verts.push_back(g.edge(e).u);
    verts.push_back(g.edge(e).v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const InducedSubgraph sub = induced_subgraph(g, verts);
  const ComponentLabeling comps = connected_components(sub.graph);

  std::vector<int> edge_count(static_cast<size_t>(comps.component_count), 0);
  for (const Edge& e : sub.graph.edges())
    ++edge_count[static_cast<size_t>(comps.component_id[static_cast<size_t>(e.u)])];
  std::vector<int> best_degree(static_cast<size_t>(comps.component_count), 0);
  for (VertexId v = 0; v < sub.graph.vertex_count(); ++v) {
    auto& best = best_degree[static_cast<size_t>(comps.component_id[static_cast<size_t>(v)])];
    best = std::max(best, sub.graph.degree(v));
  }
  for (int c = 0; c < comps.component_count; ++c)
    if (best_degree[static_cast<size_t>(c)] != edge_count[static_cast<size_t>(c)]) return false;
  return true;
}

// Quadratic restatement of the ordering condition: the endpoints of every
// edge and all positions between them are pairwise adjacent.
inline bool bco_valid_literal(const Graph& g, const std::vector<VertexId>& order) {
  const int n = g.vertex_count();
  std::vector<int> pos(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
  for (const Edge& e : g.edges()) {
    const int i = std::min(pos[static_cast<size_t>(e.u)], pos[static_cast<size_t>(e.v)]);
    const int j = std::max(pos[static_cast<size_t>(e.u)], pos[static_cast<size_t>(e.v)]);
    for (int q = i; q <= j; ++q)
      for (int r = q + 1; r <= j; ++r)
        if (!g.has_edge(order[static_cast<size_t>(q)], order[static_cast<size_t>(r)])) return false;
  }
  return true;
}

inline Graph relabel(const Graph& g, const std::vector<VertexId>& perm) {
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges())
    pairs.emplace_back(perm[static_cast<size_t>(e.u)], perm[static_cast<size_t>(e.v)]);
  return Graph::build(g.vertex_count(), pairs);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : a.edges()) pairs.emplace_back(e.u, e.v);
  for (const Edge& e : b.edges())
    pairs.emplace_back(e.u + a.vertex_count(), e.v + a.vertex_count());
  return Graph::build(a.vertex_count() + b.vertex_count(), pairs);
}

}  // namespace eop::test
