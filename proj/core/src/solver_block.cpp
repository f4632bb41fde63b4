#include "eop/solver_block.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace eop {
namespace {

void check_tree_matches(const Graph& g, const CutTree& t) {
  const size_t n = static_cast<size_t>(g.vertex_count());
  if (t.is_cut.size() != n || t.blocks_at.size() != n || t.cc.size() != n)
    throw std::invalid_argument("cut tree does not match the graph");
}

}  // namespace

BlockAnalysis analyze_block_graph(const Graph& g, const CutTree& t) {
  check_tree_matches(g, t);
  const int n = g.vertex_count();
  const int nb = static_cast<int>(t.blocks.size());

  BlockAnalysis a;
  a.labels.rho_o.assign(static_cast<size_t>(n), 0);
  a.labels.rho_c.assign(static_cast<size_t>(n), 0);
  a.labels.rho_l.assign(static_cast<size_t>(n), 0);
  a.labels.rho_p.assign(static_cast<size_t>(n), 0);
  a.labels.rho_pp.assign(static_cast<size_t>(n), 0);
  a.scores.assign(static_cast<size_t>(nb), BlockScores{});
  a.gvb_value.assign(static_cast<size_t>(nb), 0);
  a.gvb_choice.assign(static_cast<size_t>(nb), GvbChoice{});
  a.c_forced_block.assign(static_cast<size_t>(n), -1);
  a.l_best_block.assign(static_cast<size_t>(n), -1);

  std::vector<VertexId> order = t.cut_vertices;
  std::sort(order.begin(), order.end(), [&](VertexId x, VertexId y) {
    const int dx = t.cut_depth[static_cast<size_t>(x)];
    const int dy = t.cut_depth[static_cast<size_t>(y)];
    return dx != dy ? dx > dy : x < y;
  });

  auto& rc = a.labels.rho_c;
  auto& rl = a.labels.rho_l;
  auto& rp = a.labels.rho_p;
  auto& rpp = a.labels.rho_pp;

  for (VertexId v : order) {
    int sum_cbsum = 0;   // rho_pp at v
    int sum_gvb = 0;     // rho_p at v
    int sum_type = 0;    // rho_c accumulator over a (type 1) / abar (type 2)
    bool any_type1 = false;
    int best_forced = std::numeric_limits<int>::min();  // a - abar, all-type-2 case
    int forced_block = -1;

    for (int b : t.cc[static_cast<size_t>(v)]) {
      BlockScores& sc = a.scores[static_cast<size_t>(b)];
      const auto& block = t.blocks[static_cast<size_t>(b)];
      const auto& children = t.cb[static_cast<size_t>(b)];

      int cbsum = 0;
      for (VertexId w : children) cbsum += rp[static_cast<size_t>(w)];

      // Branch optimum with no edge inside this block's top clique: every
      // child branch keeps its attachment unsaturated, except that one of
      // them may saturate it.
      int case_a = cbsum;
      VertexId open_w = -1;
      int best_gain = 0;
      for (VertexId w : children) {
        const int gain = a.labels.rho_o[static_cast<size_t>(w)] - rp[static_cast<size_t>(w)];
        if (gain > best_gain) {
          best_gain = gain;
          open_w = w;
        }
      }
      case_a += best_gain;

      // Branch optimum using one clique edge (x, y): the remaining clique
      // vertices stay unsaturated; one side of the edge may center a star
      // reaching into its own branch, the other keeps its neighborhood clear.
      int case_b = -1;
      GvbChoice edge_choice;
      for (size_t xi = 0; xi < block.size(); ++xi) {
        const VertexId x = block[xi];
        if (x == v) continue;
        for (size_t yi = xi + 1; yi < block.size(); ++yi) {
          const VertexId y = block[yi];
          if (y == v) continue;
          const int base =
              1 + cbsum - rp[static_cast<size_t>(x)] - rp[static_cast<size_t>(y)];
          const int v1 = std::max(rc[static_cast<size_t>(x)], rpp[static_cast<size_t>(x)]) +
                         rpp[static_cast<size_t>(y)];
          const int v2 = rpp[static_cast<size_t>(x)] +
                         std::max(rc[static_cast<size_t>(y)], rpp[static_cast<size_t>(y)]);
          const int val = base + std::max(v1, v2);
          if (val > case_b) {
            case_b = val;
            edge_choice.kind = GvbChoice::Kind::BlockEdge;
            edge_choice.x = x;
            edge_choice.y = y;
            if (v1 >= v2) {
              edge_choice.x_center = rc[static_cast<size_t>(x)] >= rpp[static_cast<size_t>(x)];
              edge_choice.y_center = false;
            } else {
              edge_choice.x_center = false;
              edge_choice.y_center = rc[static_cast<size_t>(y)] >= rpp[static_cast<size_t>(y)];
            }
          }
        }
      }

      if (case_b > case_a) {
        a.gvb_value[static_cast<size_t>(b)] = case_b;
        a.gvb_choice[static_cast<size_t>(b)] = edge_choice;
      } else {
        a.gvb_value[static_cast<size_t>(b)] = case_a;
        a.gvb_choice[static_cast<size_t>(b)] = GvbChoice{GvbChoice::Kind::NoBlockEdge, open_w};
      }

      // Star-center scores: a takes the edge (v, u) plus u's cleared
      // neighborhood, abar leaves the block edgeless.
      sc.a = -1;
      for (VertexId u : block) {
        if (u == v) continue;
        const int val = 1 + rpp[static_cast<size_t>(u)] + cbsum - rp[static_cast<size_t>(u)];
        if (val > sc.a) {
          sc.a = val;
          sc.a_arg = u;
        }
      }
      sc.abar = cbsum;
      sc.type1 = sc.a >= sc.abar;

      // Star-leaf scores: the center u in this block takes the edge (u, v)
      // plus its own star or cleared neighborhood, whichever is larger.
      sc.m = -1;
      for (VertexId u : block) {
        if (u == v) continue;
        const int best_u = std::max(rc[static_cast<size_t>(u)], rpp[static_cast<size_t>(u)]);
        const int val = best_u + 1 + cbsum - rp[static_cast<size_t>(u)];
        if (val > sc.m) {
          sc.m = val;
          sc.m_arg = u;
          sc.m_center = rc[static_cast<size_t>(u)] >= rpp[static_cast<size_t>(u)];
        }
      }

      sum_cbsum += cbsum;
      sum_gvb += a.gvb_value[static_cast<size_t>(b)];
      sum_type += sc.type1 ? sc.a : sc.abar;
      any_type1 = any_type1 || sc.type1;
      if (sc.a - sc.abar > best_forced) {
        best_forced = sc.a - sc.abar;
        forced_block = b;
      }
    }

    rpp[static_cast<size_t>(v)] = sum_cbsum;
    rp[static_cast<size_t>(v)] = sum_gvb;
    if (any_type1) {
      rc[static_cast<size_t>(v)] = sum_type;
    } else {
      rc[static_cast<size_t>(v)] = sum_type + best_forced;  // sum_type is all abar here
      a.c_forced_block[static_cast<size_t>(v)] = forced_block;
    }

    int best_l = -1;
    for (int b : t.cc[static_cast<size_t>(v)]) {
      const BlockScores& sc = a.scores[static_cast<size_t>(b)];
      int cbsum = 0;
      for (VertexId w : t.cb[static_cast<size_t>(b)]) cbsum += rp[static_cast<size_t>(w)];
      const int val = sc.m + (sum_cbsum - cbsum);
      if (val > best_l) {
        best_l = val;
        a.l_best_block[static_cast<size_t>(v)] = b;
      }
    }
    rl[static_cast<size_t>(v)] = best_l;

    a.labels.rho_o[static_cast<size_t>(v)] =
        std::max({rc[static_cast<size_t>(v)], rl[static_cast<size_t>(v)], rp[static_cast<size_t>(v)]});
    assert(rpp[static_cast<size_t>(v)] <= rp[static_cast<size_t>(v)]);
    assert(rp[static_cast<size_t>(v)] <= a.labels.rho_o[static_cast<size_t>(v)]);
    assert(rc[static_cast<size_t>(v)] >= 1 && rl[static_cast<size_t>(v)] >= 1);
  }
  return a;
}

namespace {

struct EmitTask {
  enum class Kind : unsigned char { Opt, Center, Leaf, Unsat, Cleared, Branch };
  Kind kind;
  int id;  // vertex, or block for Branch
};

EdgeSet emit_witness(const Graph& g, const CutTree& t, const BlockAnalysis& a) {
  std::vector<EdgeId> ids;
  auto add_edge = [&](VertexId u, VertexId v) {
    const auto id = g.edge_id(u, v);
    if (!id) throw std::logic_error("block analysis references a missing edge");
    ids.push_back(*id);
  };

  using K = EmitTask::Kind;
  std::vector<EmitTask> stack{{K::Opt, t.root}};
  while (!stack.empty()) {
    const EmitTask task = stack.back();
    stack.pop_back();
    switch (task.kind) {
      case K::Opt: {
        const VertexId v = task.id;
        const int c = a.labels.rho_c[static_cast<size_t>(v)];
        const int l = a.labels.rho_l[static_cast<size_t>(v)];
        const int p = a.labels.rho_p[static_cast<size_t>(v)];
        if (c >= l && c >= p)
          stack.push_back({K::Center, v});
        else if (l >= p)
          stack.push_back({K::Leaf, v});
        else
          stack.push_back({K::Unsat, v});
        break;
      }
      case K::Center: {
        const VertexId v = task.id;
        for (int b : t.cc[static_cast<size_t>(v)]) {
          const BlockScores& sc = a.scores[static_cast<size_t>(b)];
          const bool use_edge = sc.type1 || b == a.c_forced_block[static_cast<size_t>(v)];
          if (use_edge) {
            add_edge(v, sc.a_arg);
            if (t.is_cut[static_cast<size_t>(sc.a_arg)]) stack.push_back({K::Cleared, sc.a_arg});
            for (VertexId w : t.cb[static_cast<size_t>(b)])
              if (w != sc.a_arg) stack.push_back({K::Unsat, w});
          } else {
            for (VertexId w : t.cb[static_cast<size_t>(b)]) stack.push_back({K::Unsat, w});
          }
        }
        break;
      }
      case K::Leaf: {
        const VertexId v = task.id;
        const int b = a.l_best_block[static_cast<size_t>(v)];
        const BlockScores& sc = a.scores[static_cast<size_t>(b)];
        add_edge(v, sc.m_arg);
        if (t.is_cut[static_cast<size_t>(sc.m_arg)])
          stack.push_back({sc.m_center ? K::Center : K::Cleared, sc.m_arg});
        for (VertexId w : t.cb[static_cast<size_t>(b)])
          if (w != sc.m_arg) stack.push_back({K::Unsat, w});
        for (int b2 : t.cc[static_cast<size_t>(v)])
          if (b2 != b)
            for (VertexId w : t.cb[static_cast<size_t>(b2)]) stack.push_back({K::Unsat, w});
        break;
      }
      case K::Cleared: {
        const VertexId v = task.id;
        for (int b : t.cc[static_cast<size_t>(v)])
          for (VertexId w : t.cb[static_cast<size_t>(b)]) stack.push_back({K::Unsat, w});
        break;
      }
      case K::Unsat: {
        const VertexId v = task.id;
        for (int b : t.cc[static_cast<size_t>(v)]) stack.push_back({K::Branch, b});
        break;
      }
      case K::Branch: {
        const int b = task.id;
        const GvbChoice& choice = a.gvb_choice[static_cast<size_t>(b)];
        if (choice.kind == GvbChoice::Kind::NoBlockEdge) {
          for (VertexId w : t.cb[static_cast<size_t>(b)]) {
            if (w == choice.open_w)
              stack.push_back({K::Opt, w});
            else
              stack.push_back({K::Unsat, w});
          }
        } else if (choice.kind == GvbChoice::Kind::BlockEdge) {
          add_edge(choice.x, choice.y);
          if (t.is_cut[static_cast<size_t>(choice.x)])
            stack.push_back({choice.x_center ? K::Center : K::Cleared, choice.x});
          if (t.is_cut[static_cast<size_t>(choice.y)])
            stack.push_back({choice.y_center ? K::Center : K::Cleared, choice.y});
          for (VertexId w : t.cb[static_cast<size_t>(b)])
            if (w != choice.x && w != choice.y) stack.push_back({K::Unsat, w});
        }
        break;
      }
    }
  }
  return EdgeSet::of(std::move(ids));
}

}  // namespace

EOPSolution solve_block(const Graph& g, const CutTree& t) {
  check_tree_matches(g, t);
  EOPSolution out;
  if (t.root < 0) {
    // Single clique block (or an isolated vertex / empty graph).
    out.value = std::min(g.edge_count(), 1);
    if (out.value == 1) out.witness = EdgeSet::of({0});
    return out;
  }
  const BlockAnalysis a = analyze_block_graph(g, t);
  out.value = a.labels.rho_o[static_cast<size_t>(t.root)];
  out.witness = emit_witness(g, t, a);
  if (out.witness.size() != out.value)
    throw std::logic_error("block witness size disagrees with the computed value");
  return out;
}

EOPSolution solve_gvb(const Graph& g, const CutTree& t, VertexId v, int block_id) {
  check_tree_matches(g, t);
  if (v < 0 || v >= g.vertex_count() || !t.is_cut[static_cast<size_t>(v)])
    throw std::invalid_argument("branch root must be a cut vertex");
  const auto& children = t.cc[static_cast<size_t>(v)];
  if (std::find(children.begin(), children.end(), block_id) == children.end())
    throw std::invalid_argument("block is not a child of the given cut vertex");

  // Vertices of the branch: the block minus v plus everything below its
  // child cut vertices.
  std::vector<VertexId> verts;
  std::vector<VertexId> queue;
  for (VertexId w : t.blocks[static_cast<size_t>(block_id)])
    if (w != v) verts.push_back(w);
  for (VertexId w : t.cb[static_cast<size_t>(block_id)]) queue.push_back(w);
  while (!queue.empty()) {
    const VertexId w = queue.back();
    queue.pop_back();
    for (int b : t.cc[static_cast<size_t>(w)]) {
      for (VertexId x : t.blocks[static_cast<size_t>(b)])
        if (x != w) verts.push_back(x);
      for (VertexId x : t.cb[static_cast<size_t>(b)]) queue.push_back(x);
    }
  }

  const InducedSubgraph sub = induced_subgraph(g, verts);
  const auto sub_tree = build_cut_tree(sub.graph);
  if (!sub_tree) throw std::logic_error("branch of a block graph failed recognition");
  const EOPSolution inner = solve_block(sub.graph, *sub_tree);

  EOPSolution out;
  out.value = inner.value;
  std::vector<EdgeId> ids;
  ids.reserve(inner.witness.ids.size());
  for (EdgeId e : inner.witness.ids) {
    const Edge se = sub.graph.edge(e);
    const auto id = g.edge_id(sub.to_orig[static_cast<size_t>(se.u)], sub.to_orig[static_cast<size_t>(se.v)]);
    if (!id) throw std::logic_error("branch witness edge missing in the original graph");
    ids.push_back(*id);
  }
  out.witness = EdgeSet::of(std::move(ids));
  return out;
}

}  // namespace eop
