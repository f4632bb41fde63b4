#include <doctest.h>

#include <numeric>

#include "eop/generators.hpp"
#include "eop/oracle.hpp"
#include "eop/prng.hpp"
#include "eop/solver_pig.hpp"
#include "support.hpp"

using namespace eop;
using namespace eop::test;

namespace {

BCOrdering bco_of(const Graph& g) {
  auto o = compute_bco(g);
  REQUIRE(o.has_value());
  return *o;
}

}  // namespace

TEST_CASE("suffix table on the path P4") {
  const Graph p4 = path(4);
  BCOrdering o;
  o.order = {0, 1, 2, 3};
  o.position = {0, 1, 2, 3};
  o.last_neighbor = {1, 2, 3, 3};
  const SuffixTable t = compute_suffix_table(p4, o);

  CHECK(suffix_value(t, 4) == 0);  // empty suffix
  CHECK(suffix_value(t, 3) == 0);
  CHECK(suffix_value(t, 2) == 1);
  CHECK(suffix_value(t, 1) == 2);
  CHECK(suffix_value(t, 0) == 2);
  // Both the two-edge branch and skipping the front reach 2; the two-edge
  // branch wins the tie.
  CHECK(t.choice[0].kind == PigChoice::Kind::TakeTwo);
  CHECK(t.choice[0].j == 1);
  CHECK(t.choice[0].p == 2);

  const EdgeSet w = reconstruct_witness(t, p4, o);
  CHECK(w == EdgeSet::of({0, 1}));  // edges 0-1 and 1-2
  CHECK_THROWS_AS(suffix_value(t, 9), std::invalid_argument);
}

TEST_CASE("suffix table on K4") {
  const Graph k4 = complete(4);
  const BCOrdering o = bco_of(k4);
  const SuffixTable t = compute_suffix_table(k4, o);
  CHECK(suffix_value(t, 0) == 1);
  CHECK(suffix_value(t, 2) == 1);
  CHECK(suffix_value(t, 3) == 0);
}

TEST_CASE("solve_pig on worked examples") {
  SUBCASE("P4 via the two-edge branch") {
    const EOPSolution s = solve_pig(path(4), bco_of(path(4)));
    CHECK(s.value == 2);
    CHECK(s.witness.size() == 2);
    CHECK(is_eop_set(path(4), s.witness));
  }
  SUBCASE("triangle takes one clique edge") {
    const Graph tri = complete(3);
    const BCOrdering o = bco_of(tri);
    const SuffixTable t = compute_suffix_table(tri, o);
    CHECK(t.choice[0].kind == PigChoice::Kind::TakeOne);
    CHECK(t.choice[0].j == 1);
    const EOPSolution s = solve_pig(tri, o);
    CHECK(s.value == 1);
    CHECK(s.witness.size() == 1);
  }
  SUBCASE("edgeless graph") {
    const EOPSolution s = solve_pig(make_graph(5, {}), bco_of(make_graph(5, {})));
    CHECK(s.value == 0);
    CHECK(s.witness.size() == 0);
  }
  SUBCASE("empty graph") {
    const Graph g = make_graph(0, {});
    CHECK(solve_pig(g, bco_of(g)).value == 0);
  }
  SUBCASE("two disjoint edges are both taken") {
    const Graph g = make_graph(4, {{0, 1}, {2, 3}});
    const EOPSolution s = solve_pig(g, bco_of(g));
    CHECK(s.value == 2);
    CHECK(s.witness == EdgeSet::of({0, 1}));
  }
  SUBCASE("invalid ordering is rejected") {
    BCOrdering bad;
    bad.order = {0, 2, 1, 3};
    bad.position = {0, 2, 1, 3};
    bad.last_neighbor = {};
    CHECK_THROWS_AS(solve_pig(path(4), bad), std::invalid_argument);
  }
}

TEST_CASE("closed forms via solve_pig") {
  for (int n = 2; n <= 8; ++n) CHECK(solve_pig(complete(n), bco_of(complete(n))).value == 1);

  // Path values frozen from exhaustive enumeration (and re-derived here).
  // Two-edge stars two apart are compatible, e.g. {ab, bc, ef} in P6, so the
  // value grows roughly with n/2 rather than staying at 2.
  const int expected[] = {0, 0, 1, 2, 2, 2, 3, 4, 4, 4, 5, 6, 6};
  for (int n = 2; n <= 12; ++n) {
    const int got = solve_pig(path(n), bco_of(path(n))).value;
    CHECK(got == expected[n]);
    if (n <= 10) CHECK(got == eop_number_by_enumeration(path(n)));
  }
}

TEST_CASE("oracle equivalence on generated proper interval graphs") {
  SplitMix64 rng(60601);
  int done = 0;
  while (done < 200) {
    const int n = 1 + static_cast<int>(rng.next_below(12));
    const double density = rng.next_double();
    const Graph g = gen_proper_interval(n, density, rng.next());
    if (g.edge_count() > 24) continue;
    ++done;
    const BCOrdering o = bco_of(g);
    const EOPSolution s = solve_pig(g, o);
    CHECK(s.value == brute_force_eop(g).value);
    CHECK(s.witness.size() == s.value);
    CHECK(is_eop_set(g, s.witness));
    CHECK(witness_spans_disjoint_stars(g, s.witness));
    if (const auto bound = eop_upper_bound(g)) CHECK(s.value <= *bound);
  }
}

TEST_CASE("suffix values are monotone and jump-dominating") {
  SplitMix64 rng(60602);
  for (int round = 0; round < 50; ++round) {
    const Graph g = gen_proper_interval(2 + static_cast<int>(rng.next_below(14)), 0.4, rng.next());
    const BCOrdering o = bco_of(g);
    const SuffixTable t = compute_suffix_table(g, o);
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i) {
      CHECK(t.rho[static_cast<size_t>(i)] >= t.rho[static_cast<size_t>(i) + 1]);
      CHECK(t.rho[static_cast<size_t>(i)] >=
            t.rho[static_cast<size_t>(o.last_neighbor[static_cast<size_t>(i)]) + 1]);
    }
  }
}

TEST_CASE("value is invariant under relabeling") {
  SplitMix64 rng(60603);
  for (int round = 0; round < 30; ++round) {
    const Graph g = gen_proper_interval(2 + static_cast<int>(rng.next_below(10)), 0.5, rng.next());
    const int base = solve_pig(g, bco_of(g)).value;
    std::vector<VertexId> perm(static_cast<size_t>(g.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    for (size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.next_below(i)]);
    const Graph h = relabel(g, perm);
    CHECK(solve_pig(h, bco_of(h)).value == base);
  }
}

TEST_CASE("value adds over disjoint unions") {
  SplitMix64 rng(60604);
  for (int round = 0; round < 20; ++round) {
    const Graph a = gen_proper_interval(1 + static_cast<int>(rng.next_below(8)), 0.5, rng.next());
    const Graph b = gen_proper_interval(1 + static_cast<int>(rng.next_below(8)), 0.3, rng.next());
    const Graph both = disjoint_union(a, b);
    CHECK(solve_pig(both, bco_of(both)).value ==
          solve_pig(a, bco_of(a)).value + solve_pig(b, bco_of(b)).value);
  }
}

TEST_CASE("repeated solves are deterministic") {
  const Graph g = gen_proper_interval(40, 0.6, 99);
  const EOPSolution a = solve_pig(g, bco_of(g));
  const EOPSolution b = solve_pig(g, bco_of(g));
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
}
