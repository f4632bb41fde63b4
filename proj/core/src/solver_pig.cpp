#include "eop/solver_pig.hpp"

#include <cassert>
#include <stdexcept>

namespace eop {

SuffixTable compute_suffix_table(const Graph& g, const BCOrdering& o) {
  const int n = g.vertex_count();
  // Last neighbor position per position; components of any suffix occupy
  // contiguous ranges and last[] is non-decreasing.
  std::vector<int> last(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int hi = i;
    for (VertexId w : g.neighbors(o.order[static_cast<size_t>(i)]))
      hi = std::max(hi, o.position[static_cast<size_t>(w)]);
    last[static_cast<size_t>(i)] = hi;
  }

  SuffixTable table;
  table.rho.assign(static_cast<size_t>(n) + 1, 0);
  table.choice.assign(static_cast<size_t>(n), PigChoice{});

  for (int t = n - 1; t >= 0; --t) {
    const int k = last[static_cast<size_t>(t)];
    int best = table.rho[static_cast<size_t>(t) + 1];
    PigChoice choice{PigChoice::Kind::SkipFront, -1, -1};

    if (k > t) {
      // One edge from the front vertex into its clique (t, k]; everything at
      // positions <= last[j] is then blocked.
      int best1 = -1, arg_j = -1;
      for (int j = t + 1; j <= k; ++j) {
        const int val = 1 + table.rho[static_cast<size_t>(last[static_cast<size_t>(j)]) + 1];
        if (val > best1) {
          best1 = val;
          arg_j = j;
        }
      }
      if (best1 >= best) {
        best = best1;
        choice = PigChoice{PigChoice::Kind::TakeOne, arg_j, -1};
      }

      // A second edge (j, p) with p past the front clique. The branch value
      // depends on p alone, and last[] is non-decreasing, so the feasible p
      // range is (k, last[k]] and the smallest j serving a given p is the
      // first one with last[j] >= p.
      if (last[static_cast<size_t>(k)] > k) {
        int best2 = -1, arg_p = -1;
        for (int p = k + 1; p <= last[static_cast<size_t>(k)]; ++p) {
          const int val = 2 + table.rho[static_cast<size_t>(last[static_cast<size_t>(p)]) + 1];
          if (val > best2) {
            best2 = val;
            arg_p = p;
          }
        }
        int arg_j2 = -1;
        for (int j = t + 1; j <= k; ++j) {
          if (last[static_cast<size_t>(j)] >= arg_p) {
            arg_j2 = j;
            break;
          }
        }
        if (best2 >= best) {
          best = best2;
          choice = PigChoice{PigChoice::Kind::TakeTwo, arg_j2, arg_p};
        }
      }
    }

    table.rho[static_cast<size_t>(t)] = best;
    table.choice[static_cast<size_t>(t)] = choice;
    assert(best >= table.rho[static_cast<size_t>(t) + 1]);
    assert(best >= table.rho[static_cast<size_t>(k) + 1]);
  }
  return table;
}

int suffix_value(const SuffixTable& table, int t) {
  if (t < 0 || t >= static_cast<int>(table.rho.size()))
    throw std::invalid_argument("suffix start out of range");
  return table.rho[static_cast<size_t>(t)];
}

EdgeSet reconstruct_witness(const SuffixTable& table, const Graph& g, const BCOrdering& o) {
  const int n = g.vertex_count();
  std::vector<int> last(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int hi = i;
    for (VertexId w : g.neighbors(o.order[static_cast<size_t>(i)]))
      hi = std::max(hi, o.position[static_cast<size_t>(w)]);
    last[static_cast<size_t>(i)] = hi;
  }

  auto edge_between = [&](int a, int b) {
    const auto id = g.edge_id(o.order[static_cast<size_t>(a)], o.order[static_cast<size_t>(b)]);
    if (!id) throw std::logic_error("suffix table references a missing edge");
    return *id;
  };

  std::vector<EdgeId> ids;
  int t = 0;
  while (t < n) {
    const PigChoice c = table.choice[static_cast<size_t>(t)];
    switch (c.kind) {
      case PigChoice::Kind::SkipFront:
        t += 1;
        break;
      case PigChoice::Kind::TakeOne:
        ids.push_back(edge_between(t, c.j));
        t = last[static_cast<size_t>(c.j)] + 1;
        break;
      case PigChoice::Kind::TakeTwo:
        ids.push_back(edge_between(t, c.j));
        ids.push_back(edge_between(c.j, c.p));
        t = last[static_cast<size_t>(c.p)] + 1;
        break;
      default:
        throw std::logic_error("suffix table has an unfilled choice");
    }
  }
  EdgeSet witness = EdgeSet::of(std::move(ids));
  if (witness.size() != table.rho[0])
    throw std::logic_error("reconstructed witness size disagrees with the table");
  return witness;
}

EOPSolution solve_pig(const Graph& g, const BCOrdering& o) {
  if (!validate_bco(g, o))
    throw std::invalid_argument("ordering is not a bi-compatible elimination ordering");
  const SuffixTable table = compute_suffix_table(g, o);
  EOPSolution out;
  out.value = g.vertex_count() == 0 ? 0 : table.rho[0];
  out.witness = reconstruct_witness(table, g, o);
  return out;
}

}  // namespace eop
