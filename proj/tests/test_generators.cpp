#include <doctest.h>

#include <sstream>

#include "eop/generators.hpp"
#include "eop/graph_io.hpp"
#include "eop/prng.hpp"
#include "eop/recognition.hpp"
#include "support.hpp"

using namespace eop;
using namespace eop::test;

namespace {

std::string canonical(const Graph& g) {
  std::ostringstream out;
  io::serialize_graph(g, out, io::GraphFormat::EdgeList);
  return out.str();
}

}  // namespace

TEST_CASE("proper interval generator") {
  SUBCASE("single vertex") {
    const Graph g = gen_proper_interval(1, 0.5, 7);
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("density one gives a complete graph") {
    const Graph g = gen_proper_interval(6, 1.0, 3);
    CHECK(g.edge_count() == 15);
  }
  SUBCASE("seeded determinism") {
    CHECK(canonical(gen_proper_interval(8, 0.4, 42)) == canonical(gen_proper_interval(8, 0.4, 42)));
    CHECK(canonical(gen_proper_interval(8, 0.4, 42)) != canonical(gen_proper_interval(8, 0.4, 43)));
  }
  SUBCASE("always connected and recognized") {
    SplitMix64 rng(5);
    for (int round = 0; round < 80; ++round) {
      const Graph g =
          gen_proper_interval(1 + static_cast<int>(rng.next_below(40)), rng.next_double(), rng.next());
      CHECK(connected_components(g).component_count == 1);
      CHECK(compute_bco(g).has_value());
    }
  }
  CHECK_THROWS_AS(gen_proper_interval(0, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_proper_interval(4, 1.5, 1), std::invalid_argument);
}

TEST_CASE("block generator") {
  SUBCASE("one minimal block is a single edge") {
    const Graph g = gen_block(1, 2, 9);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
  }
  SUBCASE("all blocks of size two give a tree") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
      const int k = 1 + static_cast<int>(seed % 12);
      const Graph g = gen_block(k, 2, seed);
      CHECK(g.edge_count() == k);
      CHECK(g.vertex_count() == k + 1);
      CHECK(connected_components(g).component_count == 1);
    }
  }
  SUBCASE("seeded determinism and recognition") {
    CHECK(canonical(gen_block(3, 3, 7)) == canonical(gen_block(3, 3, 7)));
    SplitMix64 rng(6);
    for (int round = 0; round < 80; ++round) {
      const Graph g = gen_block(1 + static_cast<int>(rng.next_below(8)),
                                2 + static_cast<int>(rng.next_below(4)), rng.next());
      CHECK(connected_components(g).component_count == 1);
      CHECK(build_cut_tree(g).has_value());
    }
  }
  CHECK_THROWS_AS(gen_block(0, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_block(1, 1, 1), std::invalid_argument);
}

TEST_CASE("split generator") {
  SUBCASE("clique only") {
    const Graph g = gen_split(3, 0, 0.5, 11);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
  }
  SUBCASE("independent side only") {
    const Graph g = gen_split(0, 4, 0.5, 11);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("full bipartite part") {
    const Graph g = gen_split(2, 3, 1.0, 11);
    CHECK(g.edge_count() == 1 + 6);
  }
  SUBCASE("seeded determinism and recognition") {
    CHECK(canonical(gen_split(4, 6, 0.3, 17)) == canonical(gen_split(4, 6, 0.3, 17)));
    SplitMix64 rng(8);
    for (int round = 0; round < 80; ++round) {
      const Graph g = gen_split(static_cast<int>(rng.next_below(8)),
                                static_cast<int>(rng.next_below(10)), rng.next_double(), rng.next());
      CHECK(split_partition(g).has_value());
    }
  }
  CHECK_THROWS_AS(gen_split(-1, 2, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_split(2, 2, 1.5, 1), std::invalid_argument);
}
