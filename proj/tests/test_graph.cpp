#include <set>

#include "combgraph/errors.hpp"
#include "combgraph/generators.hpp"
#include "combgraph/graph.hpp"
#include "combgraph/io.hpp"
#include "combgraph/oracles.hpp"
#include "doctest.h"

using namespace combgraph;

namespace {
Graph path4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
}  // namespace

TEST_CASE("graph construction") {
  Graph empty3(3, {});
  CHECK(empty3.size() == 3);
  CHECK(empty3.edge_count() == 0);

  Graph k2(2, {{0, 1}});
  CHECK(k2.adjacent(0, 1));
  CHECK(k2.adjacent(1, 0));

  Graph p4 = path4();
  CHECK(p4.edge_count() == 3);
  CHECK(p4.adjacent(1, 2));
  CHECK_FALSE(p4.adjacent(0, 2));

  CHECK_THROWS_AS(Graph(3, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{0, 5}}), PreconditionError);
}

TEST_CASE("complement basics") {
  Graph k3 = complement(Graph(3, {}));
  CHECK(k3.edge_count() == 3);

  // P4 is self-complementary: its complement is the path 2-0-3-1.
  Graph co = complement(path4());
  std::set<std::pair<int, int>> expect{{0, 2}, {0, 3}, {1, 3}};
  auto edges = co.edges();
  CHECK(std::set<std::pair<int, int>>(edges.begin(), edges.end()) == expect);

  CHECK(complement(co) == path4());
}

TEST_CASE("complement is an involution (exhaustive n <= 7, sampled n = 8)") {
  for (int n = 0; n <= 7; ++n) {
    if (n == 0) {
      Graph g(0, {});
      CHECK(complement(complement(g)) == g);
      continue;
    }
    std::uint32_t masks = n < 2 ? 1 : 1u << (n * (n - 1) / 2);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      Graph g = CographClosure::graph_of_mask(n, mask);
      if (complement(complement(g)) != g) {
        FAIL("involution broken at n=", n, " mask=", mask);
      }
    }
  }
  for (int trial = 0; trial < 2000; ++trial) {
    GeneratorSpec spec;
    spec.kind = GenKind::Gnp;
    spec.n = 8;
    spec.p = 0.5;
    spec.seed = 100 + trial;
    Graph g = generate(spec).graph;
    if (complement(complement(g)) != g) FAIL("involution broken on sample ", trial);
  }
}

TEST_CASE("induced subgraphs") {
  Graph p4 = path4();
  Induced i = induced(p4, Bits::of(4, {0, 1}));
  CHECK(i.graph == Graph(2, {{0, 1}}));
  CHECK(i.vertices == std::vector<int>{0, 1});

  CHECK(induced(p4, Bits(4)).graph.size() == 0);

  Graph k4 = complement(Graph(4, {}));
  CHECK(induced(k4, Bits::of(4, {0, 1, 2})).graph == complement(Graph(3, {})));

  CHECK(induced(p4, Bits::full(4)).graph == p4);
}

TEST_CASE("neighborhood") {
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(neighborhood(star, 0, Bits::full(4)).count() == 3);
  CHECK(neighborhood(star, 1, Bits::of(4, {2, 3})).empty());

  Graph p4 = path4();
  CHECK(neighborhood(p4, 1, Bits::of(4, {0, 2, 3})) == Bits::of(4, {0, 2}));

  Graph lonely(3, {});
  CHECK(neighborhood(lonely, 1, Bits::full(3)).empty());
}

TEST_CASE("neighborhood stays inside x and excludes the center") {
  for (int trial = 0; trial < 50; ++trial) {
    GeneratorSpec spec;
    spec.kind = GenKind::Gnp;
    spec.n = 12;
    spec.p = 0.4;
    spec.seed = trial;
    Graph g = generate(spec).graph;
    SplitMix64 rng(trial);
    Bits x(12);
    for (int v = 0; v < 12; ++v) {
      if (rng.next_below(2)) x.set(v);
    }
    for (int a = 0; a < 12; ++a) {
      Bits nb = neighborhood(g, a, x);
      CHECK(nb.is_subset_of(x));
      CHECK_FALSE(nb.test(a));
    }
  }
}

TEST_CASE("max_degree_in") {
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  auto md = max_degree_in(star, Bits::full(4));
  CHECK(md.vertex == 0);
  CHECK(md.degree == 3);

  Graph edgeless(5, {});
  md = max_degree_in(edgeless, Bits::full(5));
  CHECK(md.vertex == 0);  // ties resolve to the smallest index
  CHECK(md.degree == 0);

  Graph p4 = path4();
  md = max_degree_in(p4, Bits::full(4));
  CHECK(md.vertex == 1);
  CHECK(md.degree == 2);

  CHECK_THROWS_AS(max_degree_in(p4, Bits(4)), PreconditionError);
}

TEST_CASE("graph json round trip and validation") {
  Graph p4 = path4();
  CHECK(graph_from_json(graph_to_json(p4)) == p4);

  CHECK_THROWS_AS(graph_from_json("{\"n\": 3, \"edges\": [[0,0]]}"), Error);
  CHECK_THROWS_AS(graph_from_json("{\"n\": 3, \"edges\": [[0,1],[1,0]]}"), Error);
  CHECK_THROWS_AS(graph_from_json("{\"n\": 3, \"edges\": [[0,7]]}"), Error);
  CHECK_THROWS_AS(graph_from_json("{\"edges\": []}"), Error);
  CHECK_THROWS_AS(graph_from_json("not json"), Error);
}
