#include "eop/recognition.hpp"

#include <algorithm>
#include <cassert>
#include <list>
#include <set>
#include <stdexcept>

namespace eop {
namespace {

// ---------------------------------------------------------------------------
// Perfect elimination orderings

// Maximum cardinality search visit order; the PEO candidate is its reverse.
std::vector<VertexId> mcs_visit_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(static_cast<size_t>(n), 0);
  std::vector<char> visited(static_cast<size_t>(n), 0);
  // Ordered by (weight desc, id asc).
  std::set<std::pair<int, VertexId>> queue;
  for (VertexId v = 0; v < n; ++v) queue.insert({0, v});

  std::vector<VertexId> order;
  order.reserve(static_cast<size_t>(n));
  while (!queue.empty()) {
    const VertexId v = queue.begin()->second;
    queue.erase(queue.begin());
    visited[static_cast<size_t>(v)] = 1;
    order.push_back(v);
    for (VertexId w : g.neighbors(v)) {
      if (visited[static_cast<size_t>(w)]) continue;
      queue.erase({-weight[static_cast<size_t>(w)], w});
      ++weight[static_cast<size_t>(w)];
      queue.insert({-weight[static_cast<size_t>(w)], w});
    }
  }
  return order;
}

// ---------------------------------------------------------------------------
// Lexicographic BFS with partition refinement

struct LbfsBucket {
  // (priority, vertex); the largest priority is popped first.
  std::set<std::pair<int, VertexId>> members;
  long long stamp = -1;  // step at which a child bucket was last created
  std::list<LbfsBucket>::iterator child;
};

// One sweep; within a bucket the vertex with the largest priority wins, so
// priority = position in the previous sweep yields the "+" tie-breaking rule.
std::vector<VertexId> lbfs_sweep(const Graph& g, const std::vector<int>& priority) {
  const int n = g.vertex_count();
  std::list<LbfsBucket> buckets;
  buckets.emplace_back();
  std::vector<std::list<LbfsBucket>::iterator> where(static_cast<size_t>(n), buckets.begin());
  std::vector<char> visited(static_cast<size_t>(n), 0);
  for (VertexId v = 0; v < n; ++v)
    buckets.begin()->members.insert({priority[static_cast<size_t>(v)], v});

  std::vector<VertexId> order;
  order.reserve(static_cast<size_t>(n));
  for (long long step = 0; step < n; ++step) {
    while (buckets.front().members.empty()) buckets.pop_front();
    auto& front = buckets.front();
    const VertexId v = std::prev(front.members.end())->second;
    front.members.erase(std::prev(front.members.end()));
    visited[static_cast<size_t>(v)] = 1;
    order.push_back(v);

    for (VertexId w : g.neighbors(v)) {
      if (visited[static_cast<size_t>(w)]) continue;
      auto bucket = where[static_cast<size_t>(w)];
      if (bucket->stamp != step) {
        bucket->stamp = step;
        bucket->child = buckets.insert(bucket, LbfsBucket{});
      }
      bucket->members.erase({priority[static_cast<size_t>(w)], w});
      bucket->child->members.insert({priority[static_cast<size_t>(w)], w});
      where[static_cast<size_t>(w)] = bucket->child;
    }
  }
  return order;
}

BCOrdering make_ordering(const Graph& g, std::vector<VertexId> order) {
  const int n = g.vertex_count();
  BCOrdering o;
  o.order = std::move(order);
  o.position.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) o.position[static_cast<size_t>(o.order[static_cast<size_t>(i)])] = i;
  o.last_neighbor.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int last = i;
    for (VertexId w : g.neighbors(o.order[static_cast<size_t>(i)]))
      last = std::max(last, o.position[static_cast<size_t>(w)]);
    o.last_neighbor[static_cast<size_t>(i)] = last;
  }
  return o;
}

// ---------------------------------------------------------------------------
// Biconnected decomposition (iterative Tarjan with an edge stack)

struct BiconnectedPieces {
  std::vector<std::vector<VertexId>> blocks;
  std::vector<char> is_cut;
};

BiconnectedPieces biconnected_blocks(const Graph& g) {
  const int n = g.vertex_count();
  BiconnectedPieces out;
  out.is_cut.assign(static_cast<size_t>(n), 0);

  std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<int> parent(static_cast<size_t>(n), -1);
  std::vector<size_t> next_nbr(static_cast<size_t>(n), 0);
  std::vector<std::pair<VertexId, VertexId>> edge_stack;
  int timer = 0;

  auto collect_block = [&](VertexId u, VertexId v) {
    std::vector<VertexId> verts;
    while (!edge_stack.empty()) {
      const auto [a, b] = edge_stack.back();
      edge_stack.pop_back();
      verts.push_back(a);
      verts.push_back(b);
      if (a == u && b == v) break;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    out.blocks.push_back(std::move(verts));
  };

  for (VertexId start = 0; start < n; ++start) {
    if (disc[static_cast<size_t>(start)] >= 0) continue;
    if (g.degree(start) == 0) {
      out.blocks.push_back({start});
      continue;
    }
    int root_children = 0;
    std::vector<VertexId> stack{start};
    disc[static_cast<size_t>(start)] = low[static_cast<size_t>(start)] = timer++;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      const auto nbrs = g.neighbors(v);
      if (next_nbr[static_cast<size_t>(v)] < nbrs.size()) {
        const VertexId w = nbrs[next_nbr[static_cast<size_t>(v)]++];
        if (disc[static_cast<size_t>(w)] < 0) {
          parent[static_cast<size_t>(w)] = v;
          disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
          edge_stack.emplace_back(v, w);
          if (v == start) ++root_children;
          stack.push_back(w);
        } else if (w != parent[static_cast<size_t>(v)] &&
                   disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(v)]) {
          edge_stack.emplace_back(v, w);
          low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], disc[static_cast<size_t>(w)]);
        }
      } else {
        stack.pop_back();
        const VertexId p = parent[static_cast<size_t>(v)];
        if (p >= 0) {
          low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(v)]);
          if (low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(p)]) {
            if (p != start || root_children > 1) out.is_cut[static_cast<size_t>(p)] = 1;
            collect_block(p, v);
          }
        }
      }
    }
  }
  return out;
}

bool block_is_clique(const Graph& g, const std::vector<VertexId>& verts) {
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (!g.has_edge(verts[i], verts[j])) return false;
  return true;
}

}  // namespace

std::optional<std::vector<VertexId>> compute_peo(const Graph& g) {
  std::vector<VertexId> order = mcs_visit_order(g);
  std::reverse(order.begin(), order.end());
  if (!is_peo(g, order)) return std::nullopt;
  return order;
}

bool is_peo(const Graph& g, std::span<const VertexId> order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> position(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const VertexId v = order[static_cast<size_t>(i)];
    if (v < 0 || v >= n || position[static_cast<size_t>(v)] >= 0) return false;
    position[static_cast<size_t>(v)] = i;
  }
  for (int i = 0; i < n; ++i) {
    const VertexId v = order[static_cast<size_t>(i)];
    VertexId anchor = -1;
    int anchor_pos = n;
    for (VertexId w : g.neighbors(v)) {
      const int pw = position[static_cast<size_t>(w)];
      if (pw > i && pw < anchor_pos) {
        anchor_pos = pw;
        anchor = w;
      }
    }
    if (anchor < 0) continue;
    for (VertexId w : g.neighbors(v)) {
      const int pw = position[static_cast<size_t>(w)];
      if (pw > i && w != anchor && !g.has_edge(anchor, w)) return false;
    }
  }
  return true;
}

std::optional<BCOrdering> compute_bco(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return BCOrdering{};

  // First sweep starts from vertex 0; each later sweep breaks ties toward the
  // vertex placed latest by the previous sweep. Three sweeps suffice for
  // proper interval graphs; a couple more are attempted before giving up.
  std::vector<int> priority(static_cast<size_t>(n));
  for (VertexId v = 0; v < n; ++v) priority[static_cast<size_t>(v)] = n - 1 - v;
  std::vector<VertexId> sweep = lbfs_sweep(g, priority);
  for (int round = 1; round <= 5; ++round) {
    for (int i = 0; i < n; ++i) priority[static_cast<size_t>(sweep[static_cast<size_t>(i)])] = i;
    sweep = lbfs_sweep(g, priority);
    if (round >= 2) {
      BCOrdering o = make_ordering(g, sweep);
      if (validate_bco(g, o)) return o;
    }
  }
  return std::nullopt;
}

bool validate_bco(const Graph& g, const BCOrdering& o) {
  const int n = g.vertex_count();
  if (static_cast<int>(o.order.size()) != n) return false;
  std::vector<int> position(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const VertexId v = o.order[static_cast<size_t>(i)];
    if (v < 0 || v >= n || position[static_cast<size_t>(v)] >= 0) return false;
    position[static_cast<size_t>(v)] = i;
  }
  // The clique-between-edge-endpoints condition is equivalent to: every
  // later-neighborhood is the contiguous position range (i, last[i]], and
  // last[] is non-decreasing.
  std::vector<int> last(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const VertexId v = o.order[static_cast<size_t>(i)];
    int hi = i, count = 0;
    for (VertexId w : g.neighbors(v)) {
      const int pw = position[static_cast<size_t>(w)];
      if (pw > i) {
        hi = std::max(hi, pw);
        ++count;
      }
    }
    if (count != hi - i) return false;
    last[static_cast<size_t>(i)] = hi;
  }
  for (int i = 0; i + 1 < n; ++i)
    if (last[static_cast<size_t>(i)] > last[static_cast<size_t>(i) + 1]) return false;
  return true;
}

std::optional<CutTree> build_cut_tree(const Graph& g, std::optional<VertexId> root_hint) {
  const int n = g.vertex_count();
  if (n > 0 && connected_components(g).component_count != 1)
    throw std::invalid_argument("cut tree requires a connected graph");

  BiconnectedPieces pieces = biconnected_blocks(g);
  for (const auto& verts : pieces.blocks)
    if (!block_is_clique(g, verts)) return std::nullopt;

  CutTree t;
  t.blocks = std::move(pieces.blocks);
  t.is_cut = std::move(pieces.is_cut);
  const int nb = static_cast<int>(t.blocks.size());
  for (VertexId v = 0; v < n; ++v)
    if (t.is_cut[static_cast<size_t>(v)]) t.cut_vertices.push_back(v);
  t.blocks_at.assign(static_cast<size_t>(n), {});
  for (int b = 0; b < nb; ++b)
    for (VertexId v : t.blocks[static_cast<size_t>(b)]) t.blocks_at[static_cast<size_t>(v)].push_back(b);

  t.parent_block.assign(static_cast<size_t>(n), -1);
  t.parent_cut.assign(static_cast<size_t>(nb), -1);
  t.cc.assign(static_cast<size_t>(n), {});
  t.cb.assign(static_cast<size_t>(nb), {});
  t.cut_depth.assign(static_cast<size_t>(n), -1);

  if (t.cut_vertices.empty()) {
    t.root = -1;
    return t;
  }
  t.root = (root_hint && *root_hint >= 0 && *root_hint < n && t.is_cut[static_cast<size_t>(*root_hint)])
               ? *root_hint
               : t.cut_vertices.front();

  // Breadth-first layering of the bipartite block / cut-vertex incidence
  // structure, starting from the root cut vertex.
  std::vector<char> block_seen(static_cast<size_t>(nb), 0);
  std::vector<VertexId> frontier{t.root};
  t.cut_depth[static_cast<size_t>(t.root)] = 0;
  while (!frontier.empty()) {
    std::vector<VertexId> next;
    for (VertexId v : frontier) {
      for (int b : t.blocks_at[static_cast<size_t>(v)]) {
        if (b == t.parent_block[static_cast<size_t>(v)]) continue;
        t.cc[static_cast<size_t>(v)].push_back(b);
        t.parent_cut[static_cast<size_t>(b)] = v;
        block_seen[static_cast<size_t>(b)] = 1;
        for (VertexId w : t.blocks[static_cast<size_t>(b)]) {
          if (w == v || !t.is_cut[static_cast<size_t>(w)]) continue;
          t.cb[static_cast<size_t>(b)].push_back(w);
          t.parent_block[static_cast<size_t>(w)] = b;
          t.cut_depth[static_cast<size_t>(w)] = t.cut_depth[static_cast<size_t>(v)] + 1;
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  assert(std::all_of(block_seen.begin(), block_seen.end(), [](char c) { return c != 0; }));
  return t;
}

std::optional<SplitPartition> split_partition(const Graph& g) {
  const int n = g.vertex_count();
  SplitPartition p;
  if (n == 0) return p;

  std::vector<VertexId> by_degree(static_cast<size_t>(n));
  for (VertexId v = 0; v < n; ++v) by_degree[static_cast<size_t>(v)] = v;
  std::sort(by_degree.begin(), by_degree.end(), [&](VertexId a, VertexId b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  });

  // Largest m with d_(m) >= m-1 on the descending degree sequence, then the
  // split equality sum(d_i, i<=m) == m(m-1) + sum(d_i, i>m).
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (g.degree(by_degree[static_cast<size_t>(i)]) >= i) m = i + 1;
  long long head = 0, tail = 0;
  for (int i = 0; i < n; ++i) {
    if (i < m)
      head += g.degree(by_degree[static_cast<size_t>(i)]);
    else
      tail += g.degree(by_degree[static_cast<size_t>(i)]);
  }
  if (head != static_cast<long long>(m) * (m - 1) + tail) return std::nullopt;

  p.clique.assign(by_degree.begin(), by_degree.begin() + m);
  p.independent.assign(by_degree.begin() + m, by_degree.end());
  std::sort(p.clique.begin(), p.clique.end());
  std::sort(p.independent.begin(), p.independent.end());

  for (size_t i = 0; i < p.clique.size(); ++i)
    for (size_t j = i + 1; j < p.clique.size(); ++j)
      if (!g.has_edge(p.clique[i], p.clique[j])) return std::nullopt;
  std::vector<char> in_s(static_cast<size_t>(n), 0);
  for (VertexId s : p.independent) in_s[static_cast<size_t>(s)] = 1;
  for (VertexId s : p.independent)
    for (VertexId w : g.neighbors(s))
      if (in_s[static_cast<size_t>(w)]) return std::nullopt;

  // Promote at most one independent vertex adjacent to the whole clique so
  // the clique reaches maximum size.
  auto adjacent_to_all = [&](VertexId s) {
    for (VertexId x : p.clique)
      if (!g.has_edge(s, x)) return false;
    return true;
  };
  int promotions = 0;
  for (auto it = p.independent.begin(); it != p.independent.end();) {
    if (adjacent_to_all(*it)) {
      p.clique.insert(std::lower_bound(p.clique.begin(), p.clique.end(), *it), *it);
      it = p.independent.erase(it);
      if (++promotions > 1)
        throw std::logic_error("split promotion needed more than one move");
    } else {
      ++it;
    }
  }
  return p;
}

ClassTags classify(const Graph& g) {
  ClassTags tags;
  tags.proper_interval = compute_bco(g).has_value();
  tags.split = split_partition(g).has_value();
  tags.chordal = compute_peo(g).has_value();

  tags.block = true;
  const ComponentLabeling comps = connected_components(g);
  std::vector<std::vector<VertexId>> members(static_cast<size_t>(comps.component_count));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    members[static_cast<size_t>(comps.component_id[static_cast<size_t>(v)])].push_back(v);
  for (const auto& verts : members) {
    const InducedSubgraph sub = induced_subgraph(g, verts);
    if (!build_cut_tree(sub.graph).has_value()) {
      tags.block = false;
      break;
    }
  }
  return tags;
}

}  // namespace eop
