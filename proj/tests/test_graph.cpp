#include <doctest.h>

#include "eop/graph.hpp"
#include "eop/prng.hpp"
#include "support.hpp"

using namespace eop;
using namespace eop::test;

TEST_CASE("build_graph basics") {
  const Graph p4 = path(4);
  CHECK(p4.vertex_count() == 4);
  CHECK(p4.edge_count() == 3);
  CHECK(p4.has_edge(0, 1));
  CHECK(p4.has_edge(1, 0));
  CHECK(!p4.has_edge(0, 2));

  const Graph tri = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(tri.min_degree() == 2);
  CHECK(tri.max_degree() == 2);

  CHECK_THROWS_AS(make_graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(4, {{0, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("duplicate edges collapse, ids follow first appearance") {
  const Graph g = make_graph(3, {{1, 0}, {1, 2}, {0, 1}, {2, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{1, 2});
  CHECK(g.edge_id(2, 1) == 1);
}

TEST_CASE("adjacency is symmetric and sorted") {
  const Graph g = make_graph(5, {{4, 0}, {0, 2}, {2, 4}, {1, 2}});
  int incidences = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto nbrs = g.neighbors(v);
    const auto eids = g.incident_edges(v);
    REQUIRE(nbrs.size() == eids.size());
    CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
    for (size_t i = 0; i < nbrs.size(); ++i) {
      CHECK(g.has_edge(nbrs[i], v));
      const Edge e = g.edge(eids[i]);
      CHECK(((e.u == v && e.v == nbrs[i]) || (e.v == v && e.u == nbrs[i])));
      ++incidences;
    }
  }
  CHECK(incidences == 2 * g.edge_count());
}

TEST_CASE("induced_subgraph") {
  const Graph p4 = path(4);
  SUBCASE("path restriction") {
    const InducedSubgraph sub = induced_subgraph(p4, std::vector<VertexId>{1, 2, 3});
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.edge_count() == 2);
    CHECK(sub.to_sub[0] == -1);
    CHECK(sub.to_sub[1] == 0);
    CHECK(sub.to_orig[2] == 3);
  }
  SUBCASE("pair from a triangle") {
    const Graph tri = complete(3);
    const InducedSubgraph sub = induced_subgraph(tri, std::vector<VertexId>{0, 2});
    CHECK(sub.graph.edge_count() == 1);
  }
  SUBCASE("empty subset") {
    const InducedSubgraph sub = induced_subgraph(p4, std::vector<VertexId>{});
    CHECK(sub.graph.vertex_count() == 0);
    CHECK(sub.graph.edge_count() == 0);
  }
  CHECK_THROWS_AS(induced_subgraph(p4, std::vector<VertexId>{5}), std::invalid_argument);
}

TEST_CASE("connected_components") {
  CHECK(connected_components(path(4)).component_count == 1);
  const Graph two_edges = make_graph(4, {{0, 1}, {2, 3}});
  const ComponentLabeling lab = connected_components(two_edges);
  CHECK(lab.component_count == 2);
  CHECK(lab.component_id[0] == lab.component_id[1]);
  CHECK(lab.component_id[0] != lab.component_id[2]);
  CHECK(connected_components(make_graph(3, {})).component_count == 3);
}

TEST_CASE("is_eop_set on the worked examples") {
  const Graph tri = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto violation = find_eop_violation(tri, EdgeSet::of({0, 1}));
  REQUIRE(violation.has_value());
  CHECK(violation->e1 == 0);
  CHECK(violation->e2 == 1);
  CHECK(violation->common == 2);

  const Graph p3 = path(3);
  CHECK(is_eop_set(p3, EdgeSet::of({0, 1})));

  CHECK(is_eop_set(tri, EdgeSet::of({})));
  CHECK(is_eop_set(tri, EdgeSet::of({1})));

  CHECK_THROWS_AS((void)is_eop_set(tri, EdgeSet::of({5})), std::invalid_argument);
  EdgeSet dup;
  dup.ids = {0, 0};
  CHECK_THROWS_AS((void)is_eop_set(tri, dup), std::invalid_argument);
}

TEST_CASE("is_eop_set agrees with the literal definition on random graphs") {
  SplitMix64 rng(20250810);
  for (int round = 0; round < 200; ++round) {
    const int n = 3 + static_cast<int>(rng.next_below(6));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.next_double() < 0.4) pairs.emplace_back(i, j);
    const Graph g = Graph::build(n, pairs);
    if (g.edge_count() == 0) continue;
    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (rng.next_double() < 0.4) ids.push_back(e);
    CHECK(is_eop_set(g, EdgeSet::of(ids)) == is_eop_set_literal(g, ids));
  }
}

TEST_CASE("pair symmetry of the conflict relation") {
  SplitMix64 rng(7);
  for (int round = 0; round < 100; ++round) {
    const int n = 4 + static_cast<int>(rng.next_below(5));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.next_double() < 0.5) pairs.emplace_back(i, j);
    const Graph g = Graph::build(n, pairs);
    if (g.edge_count() < 2) continue;
    const EdgeId a = static_cast<EdgeId>(rng.next_below(static_cast<uint64_t>(g.edge_count())));
    const EdgeId b = static_cast<EdgeId>(rng.next_below(static_cast<uint64_t>(g.edge_count())));
    if (a == b) continue;
    CHECK(find_common_edge(g, a, b).has_value() == find_common_edge(g, b, a).has_value());
  }
}

TEST_CASE("subsets of valid packings stay valid") {
  SplitMix64 rng(99);
  const Graph g = make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6}, {2, 5}});
  for (int round = 0; round < 100; ++round) {
    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (rng.next_double() < 0.5) ids.push_back(e);
    if (!is_eop_set(g, EdgeSet::of(ids))) continue;
    std::vector<EdgeId> sub;
    for (EdgeId e : ids)
      if (rng.next_double() < 0.5) sub.push_back(e);
    CHECK(is_eop_set(g, EdgeSet::of(sub)));
  }
}

TEST_CASE("valid packings span disjoint stars") {
  const Graph s4 = star(4);
  EdgeSet all = EdgeSet::of({0, 1, 2, 3});
  REQUIRE(is_eop_set(s4, all));
  CHECK(witness_spans_disjoint_stars(s4, all));

  const Graph p3 = path(3);
  CHECK(witness_spans_disjoint_stars(p3, EdgeSet::of({0, 1})));
}

TEST_CASE("eop_upper_bound") {
  CHECK(eop_upper_bound(cycle(3)) == 1);
  CHECK(eop_upper_bound(complete(4)) == 2);
  CHECK(!eop_upper_bound(make_graph(3, {{0, 1}})).has_value());  // isolated vertex
  CHECK(!eop_upper_bound(make_graph(0, {})).has_value());
}
