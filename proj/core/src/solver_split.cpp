#include "eop/solver_split.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace eop {
namespace {

void check_partition(const Graph& g, const SplitPartition& p) {
  const int n = g.vertex_count();
  std::vector<char> mark(static_cast<size_t>(n), 0);
  for (VertexId v : p.clique) {
    if (v < 0 || v >= n || mark[static_cast<size_t>(v)]) throw std::invalid_argument("bad split partition");
    mark[static_cast<size_t>(v)] = 1;
  }
  for (VertexId v : p.independent) {
    if (v < 0 || v >= n || mark[static_cast<size_t>(v)]) throw std::invalid_argument("bad split partition");
    mark[static_cast<size_t>(v)] = 2;
  }
  for (VertexId v = 0; v < n; ++v)
    if (!mark[static_cast<size_t>(v)]) throw std::invalid_argument("split partition does not cover the graph");
  for (size_t i = 0; i < p.clique.size(); ++i)
    for (size_t j = i + 1; j < p.clique.size(); ++j)
      if (!g.has_edge(p.clique[i], p.clique[j]))
        throw std::invalid_argument("clique side of the partition is not complete");
  for (VertexId s : p.independent)
    for (VertexId w : g.neighbors(s))
      if (mark[static_cast<size_t>(w)] == 2)
        throw std::invalid_argument("independent side of the partition has an edge");
}

}  // namespace

SplitStats compute_stats(const Graph& g, const SplitPartition& p) {
  check_partition(g, p);
  const int n = g.vertex_count();
  std::vector<char> in_s(static_cast<size_t>(n), 0);
  for (VertexId s : p.independent) in_s[static_cast<size_t>(s)] = 1;

  SplitStats stats;
  stats.l.assign(p.clique.size(), 0);
  for (size_t i = 0; i < p.clique.size(); ++i)
    for (VertexId w : g.neighbors(p.clique[i]))
      if (in_s[static_cast<size_t>(w)]) ++stats.l[i];

  for (VertexId s : p.independent) {
    const auto nbrs = g.neighbors(s);
    for (size_t i = 0; i < nbrs.size(); ++i)
      for (size_t j = i + 1; j < nbrs.size(); ++j)
        ++stats.lpair[{std::min(nbrs[i], nbrs[j]), std::max(nbrs[i], nbrs[j])}];
  }
  return stats;
}

EOPSolution solve_split(const Graph& g, const SplitPartition& p) {
  check_partition(g, p);
  const int n = g.vertex_count();
  const int k = static_cast<int>(p.clique.size());

  std::vector<char> in_s(static_cast<size_t>(n), 0);
  for (VertexId s : p.independent) in_s[static_cast<size_t>(s)] = 1;
  // An independent vertex adjacent to the whole clique would contradict the
  // clique side being maximum.
  for (VertexId s : p.independent)
    if (k > 0 && static_cast<int>(g.neighbors(s).size()) == k)
      throw std::invalid_argument("independent vertex adjacent to the whole clique");

  std::vector<int> clique_index(static_cast<size_t>(n), -1);
  for (int i = 0; i < k; ++i) clique_index[static_cast<size_t>(p.clique[static_cast<size_t>(i)])] = i;

  std::vector<int> l(static_cast<size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (VertexId w : g.neighbors(p.clique[static_cast<size_t>(i)]))
      if (in_s[static_cast<size_t>(w)]) ++l[static_cast<size_t>(i)];

  // Partner lists: co[i] holds one entry per (independent vertex, pair)
  // incidence, so after sorting, run lengths are the common-neighbor counts.
  // Pairs that never appear have count 0.
  std::vector<std::vector<int>> co(static_cast<size_t>(k));
  for (VertexId s : p.independent) {
    const auto nbrs = g.neighbors(s);
    for (size_t i = 0; i < nbrs.size(); ++i) {
      const int xi = clique_index[static_cast<size_t>(nbrs[i])];
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        const int yj = clique_index[static_cast<size_t>(nbrs[j])];
        co[static_cast<size_t>(xi)].push_back(yj);
        co[static_cast<size_t>(yj)].push_back(xi);
      }
    }
  }

  // Star with one clique edge (x, y) centered at x: worth l_x - l_xy + 1, so
  // for each x pick the partner minimizing the common-neighbor count.
  int rho1 = -1, arg_x = -1, arg_y = -1;
  for (int i = 0; i < k && k >= 2; ++i) {
    auto& partners = co[static_cast<size_t>(i)];
    std::sort(partners.begin(), partners.end());

    int distinct = 0;
    int min_pair = std::numeric_limits<int>::max();
    int min_arg = -1;
    for (size_t idx = 0; idx < partners.size();) {
      size_t end = idx;
      while (end < partners.size() && partners[end] == partners[idx]) ++end;
      ++distinct;
      const int count = static_cast<int>(end - idx);
      if (count < min_pair) {
        min_pair = count;
        min_arg = partners[idx];
      }
      idx = end;
    }
    if (distinct < k - 1) {
      // Some partner is missing entirely: the smallest index y != i absent
      // from the list realizes l_iy = 0.
      min_pair = 0;
      min_arg = -1;
      int cand = (i == 0) ? 1 : 0;
      size_t idx = 0;
      while (min_arg < 0) {
        while (idx < partners.size() && partners[idx] < cand) ++idx;
        if (idx < partners.size() && partners[idx] == cand) {
          ++cand;
          if (cand == i) ++cand;
        } else {
          min_arg = cand;
        }
      }
    }

    const int val = l[static_cast<size_t>(i)] - min_pair + 1;
    if (val > rho1) {
      rho1 = val;
      arg_x = i;
      arg_y = min_arg;
    }
  }

  // Star fully inside the clique-to-independent edges of one center.
  int rho2 = -1, arg2 = -1;
  for (int i = 0; i < k; ++i)
    if (l[static_cast<size_t>(i)] > rho2) {
      rho2 = l[static_cast<size_t>(i)];
      arg2 = i;
    }

  EOPSolution out;
  std::vector<EdgeId> ids;
  if (rho1 >= 1 && rho1 >= rho2) {
    out.value = rho1;
    const VertexId x = p.clique[static_cast<size_t>(arg_x)];
    const VertexId y = p.clique[static_cast<size_t>(arg_y)];
    ids.push_back(*g.edge_id(x, y));
    for (VertexId s : g.neighbors(x))
      if (in_s[static_cast<size_t>(s)] && !g.has_edge(s, y)) ids.push_back(*g.edge_id(x, s));
  } else if (rho2 >= 1) {
    out.value = rho2;
    const VertexId x = p.clique[static_cast<size_t>(arg2)];
    for (VertexId s : g.neighbors(x))
      if (in_s[static_cast<size_t>(s)]) ids.push_back(*g.edge_id(x, s));
  } else {
    out.value = 0;
  }
  out.witness = EdgeSet::of(std::move(ids));
  if (out.witness.size() != out.value)
    throw std::logic_error("split witness size disagrees with the computed value");
  return out;
}

}  // namespace eop
