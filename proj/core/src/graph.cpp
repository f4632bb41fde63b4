#include "eop/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace eop {

Graph Graph::build(int vertex_count, std::span<const std::pair<int, int>> pairs) {
  if (vertex_count < 0) throw std::invalid_argument("vertex count must be non-negative");
  Graph g;
  g.n_ = vertex_count;
  g.edges_.reserve(pairs.size());

  std::unordered_set<long long> seen;
  seen.reserve(pairs.size() * 2);
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ")");
    if (a == b)
      throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(a));
    const VertexId u = std::min(a, b);
    const VertexId v = std::max(a, b);
    const long long key = static_cast<long long>(u) * vertex_count + v;
    if (seen.insert(key).second) g.edges_.push_back(Edge{u, v});
  }

  std::vector<int> deg(static_cast<size_t>(vertex_count), 0);
  for (const Edge& e : g.edges_) {
    ++deg[static_cast<size_t>(e.u)];
    ++deg[static_cast<size_t>(e.v)];
  }
  g.offsets_.assign(static_cast<size_t>(vertex_count) + 1, 0);
  for (int v = 0; v < vertex_count; ++v) g.offsets_[static_cast<size_t>(v) + 1] = g.offsets_[static_cast<size_t>(v)] + deg[static_cast<size_t>(v)];
  g.adj_.resize(static_cast<size_t>(g.offsets_.back()));
  g.adj_edge_.resize(g.adj_.size());

  std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge e = g.edges_[static_cast<size_t>(id)];
    g.adj_[static_cast<size_t>(cursor[static_cast<size_t>(e.u)])] = e.v;
    g.adj_edge_[static_cast<size_t>(cursor[static_cast<size_t>(e.u)]++)] = id;
    g.adj_[static_cast<size_t>(cursor[static_cast<size_t>(e.v)])] = e.u;
    g.adj_edge_[static_cast<size_t>(cursor[static_cast<size_t>(e.v)]++)] = id;
  }

  // Sort each neighbor list ascending, keeping edge ids aligned.
  for (int v = 0; v < vertex_count; ++v) {
    const int lo = g.offsets_[static_cast<size_t>(v)];
    const int hi = g.offsets_[static_cast<size_t>(v) + 1];
    std::vector<std::pair<VertexId, EdgeId>> tmp;
    tmp.reserve(static_cast<size_t>(hi - lo));
    for (int i = lo; i < hi; ++i) tmp.emplace_back(g.adj_[static_cast<size_t>(i)], g.adj_edge_[static_cast<size_t>(i)]);
    std::sort(tmp.begin(), tmp.end());
    for (int i = lo; i < hi; ++i) {
      g.adj_[static_cast<size_t>(i)] = tmp[static_cast<size_t>(i - lo)].first;
      g.adj_edge_[static_cast<size_t>(i)] = tmp[static_cast<size_t>(i - lo)].second;
    }
  }
  return g;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  const int lo = offsets_[static_cast<size_t>(v)];
  const int hi = offsets_[static_cast<size_t>(v) + 1];
  return {adj_.data() + lo, static_cast<size_t>(hi - lo)};
}

std::span<const EdgeId> Graph::incident_edges(VertexId v) const {
  const int lo = offsets_[static_cast<size_t>(v)];
  const int hi = offsets_[static_cast<size_t>(v) + 1];
  return {adj_edge_.data() + lo, static_cast<size_t>(hi - lo)};
}

int Graph::degree(VertexId v) const {
  return offsets_[static_cast<size_t>(v) + 1] - offsets_[static_cast<size_t>(v)];
}

std::optional<EdgeId> Graph::edge_id(VertexId u, VertexId v) const {
  if (u == v) return std::nullopt;
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nbrs = neighbors(u);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<size_t>(it - nbrs.begin())];
}

bool Graph::has_edge(VertexId u, VertexId v) const { return edge_id(u, v).has_value(); }

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

EdgeSet EdgeSet::of(std::vector<EdgeId> unsorted) {
  std::sort(unsorted.begin(), unsorted.end());
  unsorted.erase(std::unique(unsorted.begin(), unsorted.end()), unsorted.end());
  return EdgeSet{std::move(unsorted)};
}

bool EdgeSet::contains(EdgeId e) const { return std::binary_search(ids.begin(), ids.end(), e); }

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> subset(vertices.begin(), vertices.end());
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (VertexId v : subset)
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("subset vertex out of range");

  InducedSubgraph out;
  out.to_orig = subset;
  out.to_sub.assign(static_cast<size_t>(g.vertex_count()), -1);
  for (int i = 0; i < static_cast<int>(subset.size()); ++i)
    out.to_sub[static_cast<size_t>(subset[static_cast<size_t>(i)])] = i;

  std::vector<std::pair<int, int>> pairs;
  for (VertexId v : subset)
    for (VertexId w : g.neighbors(v))
      if (v < w && out.to_sub[static_cast<size_t>(w)] >= 0)
        pairs.emplace_back(out.to_sub[static_cast<size_t>(v)], out.to_sub[static_cast<size_t>(w)]);
  out.graph = Graph::build(static_cast<int>(subset.size()), pairs);
  return out;
}

ComponentLabeling connected_components(const Graph& g) {
  ComponentLabeling lab;
  lab.component_id.assign(static_cast<size_t>(g.vertex_count()), -1);
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (lab.component_id[static_cast<size_t>(s)] >= 0) continue;
    const int id = lab.component_count++;
    lab.component_id[static_cast<size_t>(s)] = id;
    queue.assign(1, s);
    while (!queue.empty()) {
      const VertexId v = queue.back();
      queue.pop_back();
      for (VertexId w : g.neighbors(v)) {
        if (lab.component_id[static_cast<size_t>(w)] < 0) {
          lab.component_id[static_cast<size_t>(w)] = id;
          queue.push_back(w);
        }
      }
    }
  }
  return lab;
}

std::optional<EdgeId> find_common_edge(const Graph& g, EdgeId e1, EdgeId e2) {
  const Edge a = g.edge(e1);
  const Edge b = g.edge(e2);
  for (VertexId p : {a.u, a.v}) {
    for (VertexId q : {b.u, b.v}) {
      if (p == q) continue;
      const auto f = g.edge_id(p, q);
      if (f && *f != e1 && *f != e2) return *f;
    }
  }
  return std::nullopt;
}

std::optional<EopViolation> find_eop_violation(const Graph& g, const EdgeSet& d) {
  for (size_t i = 0; i < d.ids.size(); ++i) {
    const EdgeId e = d.ids[i];
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("edge id out of range");
    if (i > 0 && d.ids[i - 1] >= e) throw std::invalid_argument("edge set must be sorted and duplicate-free");
  }
  for (size_t i = 0; i < d.ids.size(); ++i) {
    for (size_t j = i + 1; j < d.ids.size(); ++j) {
      if (const auto f = find_common_edge(g, d.ids[i], d.ids[j]))
        return EopViolation{d.ids[i], d.ids[j], *f};
    }
  }
  return std::nullopt;
}

bool is_eop_set(const Graph& g, const EdgeSet& d) { return !find_eop_violation(g, d).has_value(); }

std::optional<long long> eop_upper_bound(const Graph& g) {
  if (g.vertex_count() == 0 || g.min_degree() == 0) return std::nullopt;
  return static_cast<long long>(g.edge_count()) / g.min_degree();
}

}  // namespace eop
