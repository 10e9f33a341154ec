#include <sstream>

#include "combgraph/cograph.hpp"
#include "combgraph/errors.hpp"
#include "combgraph/generators.hpp"
#include "combgraph/k2.hpp"
#include "combgraph/suite.hpp"
#include "doctest.h"

using namespace combgraph;

TEST_CASE("gnp endpoints and determinism") {
  GeneratorSpec spec;
  spec.kind = GenKind::Gnp;
  spec.n = 5;
  spec.p = 0.0;
  spec.seed = 1;
  CHECK(generate(spec).graph.edge_count() == 0);
  spec.p = 1.0;
  CHECK(generate(spec).graph.edge_count() == 10);

  spec.p = 0.37;
  spec.seed = 123;
  Graph a = generate(spec).graph;
  Graph b = generate(spec).graph;
  CHECK(a == b);
  spec.seed = 124;
  CHECK(generate(spec).graph != a);
}

TEST_CASE("random cographs are cographs") {
  for (int trial = 0; trial < 30; ++trial) {
    GeneratorSpec spec;
    spec.kind = GenKind::CographRandom;
    spec.leaves = 1 + trial % 12;
    spec.join_bias = 0.5;
    spec.seed = trial;
    Generated gen = generate(spec);
    CHECK(is_cograph(gen.graph));
    CHECK(gen.cotree->leaf_count() == spec.leaves);
  }
}

TEST_CASE("planted comb instances have the promised shape") {
  GeneratorSpec spec;
  spec.kind = GenKind::PlantedComb;
  spec.teeth = 6;
  spec.tooth_size = 4;
  spec.noise = 0;
  spec.seed = 77;
  Generated gen = generate(spec);
  REQUIRE(gen.blockade);
  const Graph& g = gen.graph;
  const Blockade& b = *gen.blockade;
  CHECK(b.length() == spec.teeth + 2);
  // centre is vertex 0 and strictly dominates every degree
  for (int v = 1; v < g.size(); ++v) CHECK(g.degree(0) > g.degree(v));
  // each apex is complete to its tooth block and anticomplete to the others
  for (int i = 0; i < spec.teeth; ++i) {
    int apex = 1 + i;
    CHECK(is_pure_pair(g, Bits::of(g.size(), {apex}), b.block(1 + i)) == Purity::Complete);
    for (int j = 0; j < spec.teeth; ++j) {
      if (j != i) {
        CHECK(is_pure_pair(g, Bits::of(g.size(), {apex}), b.block(1 + j)) ==
              Purity::Anticomplete);
      }
    }
  }
}

TEST_CASE("rejection sampling accepts only rainbow-free instances") {
  GeneratorSpec spec;
  spec.kind = GenKind::RainbowFreeRejection;
  spec.k = 2;
  spec.blocks = 6;
  spec.block_size = 3;
  spec.edge_prob = 0.35;
  spec.seed = 5;
  Generated gen = generate(spec);
  CHECK_FALSE(is_rainbow_k2_free(gen.graph, *gen.blockade, 2));

  // dense k=3 proposals always violate (a triangle across three blocks plus
  // coincident witnesses), so the attempt cap trips
  spec.k = 3;
  spec.blocks = 3;
  spec.block_size = 3;
  spec.edge_prob = 0.99;
  spec.max_attempts = 4;
  CHECK_THROWS_WITH_AS(generate(spec), doctest::Contains("attempts"), Error);
}

TEST_CASE("suite runner: empty, deterministic, and failing configs") {
  SuiteOptions opts;
  std::ostringstream out;
  int failed = run_suite_text(R"({"suites": []})", out, opts);
  CHECK(failed == 0);
  CHECK(out.str().find("\"total\":0") != std::string::npos);

  std::string cfg = R"({"suites": [
    {"name": "layers", "check": "layer-invariants", "trials": 3, "seed": 11},
    {"name": "gen", "check": "generator-validity", "trials": 2, "seed": 12,
     "params": {"kind": "cograph-random"}}
  ]})";
  std::ostringstream run1, run2;
  CHECK(run_suite_text(cfg, run1, opts) == 0);
  CHECK(run_suite_text(cfg, run2, opts) == 0);
  // byte-identical modulo the timing field on the aggregate line
  auto strip_last = [](const std::string& s) {
    auto pos = s.rfind("{\"aggregate\"");
    return s.substr(0, pos);
  };
  CHECK(strip_last(run1.str()) == strip_last(run2.str()));
  CHECK(strip_last(run1.str()).find("\"pass\":true") != std::string::npos);

  CHECK_THROWS_AS(run_suite_text("{\"suites\": [{\"check\": \"nope\"}]}", out, opts), Error);
  CHECK_THROWS_AS(run_suite_text("[1,2]", out, opts), Error);

  SuiteOptions csv;
  csv.format = "csv";
  std::ostringstream csv_out;
  CHECK(run_suite_text(cfg, csv_out, csv) == 0);
  CHECK(csv_out.str().find("layers,0,11,pass") != std::string::npos);
}
