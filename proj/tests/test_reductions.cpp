#include "combgraph/errors.hpp"
#include "combgraph/generators.hpp"
#include "combgraph/k2.hpp"
#include "combgraph/lemma.hpp"
#include "doctest.h"

using namespace combgraph;

namespace {

Blockade blocks_of(int universe, std::vector<std::vector<int>> raw) {
  std::vector<Bits> blocks;
  for (const auto& blk : raw) {
    Bits b(universe);
    for (int v : blk) b.set(v);
    blocks.push_back(b);
  }
  return Blockade(universe, blocks);
}

}  // namespace

TEST_CASE("halving recursion, s = 1") {
  // four singleton blocks in an edgeless host: everything is anticomplete
  Graph edgeless(4, {});
  auto b = blocks_of(4, {{0}, {1}, {2}, {3}});
  PureBlockadeResult res = pure_blockade_from_rainbow22(edgeless, b, 1);
  CHECK(res.blockade.length() == 2);
  CHECK(res.blockade.width() >= 1);
  auto pat = pattern(edgeless, res.blockade);
  REQUIRE(pat);
  CHECK(is_cograph(*pat));
  // X = B_1 u B_2 avoids B_3 entirely, so the first output block is all of X
  CHECK(res.blockade.block(0) == Bits::of(4, {0, 1}));
  CHECK(res.blockade.block(1) == Bits::of(4, {2}));

  // all of B_1 u B_2 anticomplete to B_3 but wired into B_4: the A branch
  Graph wired(8, {{0, 6}, {1, 7}});
  auto b2 = blocks_of(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  res = pure_blockade_from_rainbow22(wired, b2, 1);
  CHECK(res.blockade.block(0) == Bits::of(8, {0, 1, 2, 3}));
  CHECK(res.blockade.block(1) == Bits::of(8, {4, 5}));
  CHECK(res.blockade.width() >= b2.width() / 4);
}

TEST_CASE("halving recursion rejects non-rainbow-free input with a counterexample") {
  // vertex 0 in block 1 sees both block 3 and block 4
  Graph g(8, {{0, 4}, {0, 6}});
  auto b = blocks_of(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  CHECK_THROWS_WITH_AS(pure_blockade_from_rainbow22(g, b, 1),
                       doctest::Contains("witnessed by"), PreconditionError);

  auto short_b = blocks_of(4, {{0}, {1}, {2}});
  CHECK_THROWS_WITH_AS(pure_blockade_from_rainbow22(Graph(4, {}), short_b, 1),
                       doctest::Contains("too short"), PreconditionError);
}

TEST_CASE("halving recursion, s = 3 at the 4096-block scale") {
  GeneratorSpec spec;
  spec.kind = GenKind::RainbowFreeRejection;
  spec.k = 2;
  spec.blocks = 4096;
  spec.block_size = 1;
  spec.edge_prob = 0.4;
  spec.seed = 1;
  Generated gen = generate(spec);
  PureBlockadeResult res = pure_blockade_from_rainbow22(gen.graph, *gen.blockade, 3);
  CHECK(res.blockade.length() == 8);
  CHECK(res.blockade.width() * 4096 >= gen.blockade->width());
  auto pat = pattern(gen.graph, res.blockade);
  REQUIRE(pat);
  CHECK(is_cograph(*pat));
}

TEST_CASE("halving recursion, s = 2 on a structured host") {
  GeneratorSpec spec;
  spec.kind = GenKind::RainbowFreeRejection;
  spec.k = 2;
  spec.blocks = 128;
  spec.block_size = 2;
  spec.edge_prob = 0.3;
  spec.seed = 4321;
  Generated gen = generate(spec);
  int w = gen.blockade->width();
  PureBlockadeResult res = pure_blockade_from_rainbow22(gen.graph, *gen.blockade, 2);
  CHECK(res.blockade.length() == 4);
  CHECK(res.blockade.width() * 128 >= w);
  auto pat = pattern(gen.graph, res.blockade);
  REQUIRE(pat);
  CHECK(is_cograph(*pat));
  CHECK(evaluate_cotree(res.pattern_tree, 4) == *pat);
}

TEST_CASE("rainbow-minor reduction on the hand-built instance") {
  // blocks: {0,1} (centre), {2,3}, {4,5}, {6,7}, {8,9}; comb apexes 2 and 4
  // over teeth {6,7} and {8,9}
  Graph g(10, {{0, 2}, {0, 4}, {2, 6}, {2, 7}, {4, 8}, {4, 9}});
  auto A = blocks_of(10, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}});
  REQUIRE_FALSE(is_rainbow_k2_free(g, A, 3));

  Comb comb;
  comb.width_floor = 2;
  comb.pairs.emplace_back(2, Bits::of(10, {6, 7}));
  comb.pairs.emplace_back(4, Bits::of(10, {8, 9}));

  Blockade out = comb_to_rainbow_minor(g, A, 3, 0, comb);
  CHECK(out.length() == 2);
  CHECK(out.block(0) == Bits::of(10, {6, 7}));
  CHECK_FALSE(is_rainbow_k2_free(g, out, 2));

  // k = 2: the conclusion is vacuous, teeth come back unchanged
  Blockade out2 = comb_to_rainbow_minor(g, A, 2, 0, comb);
  CHECK(out2.length() == 2);
}

TEST_CASE("rainbow-minor reduction names failing preconditions") {
  Graph g(10, {{0, 2}, {0, 4}, {2, 6}, {2, 7}, {4, 8}, {4, 9}, {2, 1}});
  auto A = blocks_of(10, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}});

  // tooth intersecting the centre's block
  Comb bad;
  bad.width_floor = 1;
  bad.pairs.emplace_back(2, Bits::of(10, {1}));
  CHECK_THROWS_WITH_AS(comb_to_rainbow_minor(g, A, 3, 0, bad),
                       doctest::Contains("centre's block"), PreconditionError);

  // teeth spanning two blocks are not a minor
  Graph g2(10, {{0, 2}, {2, 6}, {2, 8}});
  Comb span;
  span.width_floor = 2;
  span.pairs.emplace_back(2, Bits::of(10, {6, 8}));
  CHECK_THROWS_WITH_AS(comb_to_rainbow_minor(g2, A, 3, 0, span),
                       doctest::Contains("minor"), PreconditionError);

  // centre outside every block
  auto A2 = blocks_of(10, {{2, 3}, {6, 7}});
  Comb tiny;
  tiny.width_floor = 1;
  tiny.pairs.emplace_back(2, Bits::of(10, {6}));
  CHECK_THROWS_WITH_AS(comb_to_rainbow_minor(g, A2, 3, 0, tiny),
                       doctest::Contains("no block"), PreconditionError);

  // apex not adjacent to the centre
  Graph g3(10, {{2, 6}, {2, 7}});
  auto A3 = blocks_of(10, {{0, 1}, {2, 3}, {6, 7}});
  Comb apexless;
  apexless.width_floor = 2;
  apexless.pairs.emplace_back(2, Bits::of(10, {6, 7}));
  CHECK_THROWS_WITH_AS(comb_to_rainbow_minor(g3, A3, 3, 0, apexless),
                       doctest::Contains("neighbour of the center"), PreconditionError);
}
