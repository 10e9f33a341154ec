#include "combgraph/blockade.hpp"
#include "combgraph/errors.hpp"
#include "combgraph/generators.hpp"
#include "combgraph/io.hpp"
#include "doctest.h"

using namespace combgraph;

namespace {

Blockade sample_blockade(int universe, std::vector<std::vector<int>> raw) {
  std::vector<Bits> blocks;
  for (const auto& blk : raw) {
    Bits b(universe);
    for (int v : blk) b.set(v);
    blocks.push_back(b);
  }
  return Blockade(universe, blocks);
}

// random blockade over 0..n-1 with `len` blocks of sizes 1..max_sz
Blockade random_blockade(SplitMix64& rng, int n, int len, int max_sz) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(pool[i], pool[rng.next_below(i + 1)]);
  std::vector<Bits> blocks;
  int at = 0;
  for (int b = 0; b < len; ++b) {
    int sz = 1 + rng.next_below(max_sz);
    if (at + sz > n) break;
    Bits blk(n);
    for (int j = 0; j < sz; ++j) blk.set(pool[at++]);
    blocks.push_back(blk);
  }
  return Blockade(n, blocks);
}

}  // namespace

TEST_CASE("blockade construction and width") {
  auto b = sample_blockade(12, {{0, 1, 2}, {3, 4, 5, 6, 7}, {8, 9, 10, 11}});
  CHECK(b.length() == 3);
  CHECK(b.width() == 3);

  CHECK(sample_blockade(2, {{1}}).width() == 1);
  auto eq = sample_blockade(12, {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}});
  CHECK(eq.width() == 4);
  CHECK(is_equicardinal(eq));
  CHECK_FALSE(is_equicardinal(sample_blockade(9, {{0, 1, 2, 3}, {4, 5, 6, 7, 8}})));
  CHECK(is_equicardinal(sample_blockade(3, {{0, 1}})));

  CHECK_THROWS_AS(Blockade(4, {}).width(), PreconditionError);
  CHECK_THROWS_AS(sample_blockade(4, {{0, 1}, {1, 2}}), PreconditionError);
  CHECK_THROWS_AS(sample_blockade(4, {{0}, {}}), PreconditionError);
}

TEST_CASE("sub-blockade") {
  auto b = sample_blockade(9, {{0, 1}, {2, 3, 4}, {5, 6, 7, 8}});
  auto sub = sub_blockade(b, {0, 2});
  CHECK(sub.length() == 2);
  CHECK(sub.block(0) == b.block(0));
  CHECK(sub.block(1) == b.block(2));

  CHECK(sub_blockade(b, {0, 1, 2}) == b);

  auto wide = sub_blockade(sample_blockade(11, {{0, 1}, {2, 3, 4, 5, 6, 7, 8, 9, 10}}), {1});
  CHECK(wide.width() == 9);

  CHECK_THROWS_AS(sub_blockade(b, {}), PreconditionError);
  CHECK_THROWS_AS(sub_blockade(b, {3}), PreconditionError);
}

TEST_CASE("contraction") {
  auto b = sample_blockade(9, {{0, 1}, {2, 3, 4}, {5, 6, 7, 8}});
  CHECK(contraction(b, {b.block(0), b.block(1), b.block(2)}) == b);

  auto squeezed = contraction(b, {Bits::of(9, {0}), Bits::of(9, {3}), Bits::of(9, {7})});
  CHECK(squeezed.width() == 1);
  CHECK(squeezed.length() == 3);

  auto one = contraction(b, {b.block(0), Bits::of(9, {2}), b.block(2)});
  CHECK(one.length() == 3);

  CHECK_THROWS_AS(contraction(b, {b.block(0), Bits(9), b.block(2)}), PreconditionError);
  CHECK_THROWS_AS(contraction(b, {b.block(0), Bits::of(9, {0}), b.block(2)}),
                  PreconditionError);
}

TEST_CASE("width monotonicity under sub-blockade and contraction") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    Blockade b = random_blockade(rng, 24, 2 + rng.next_below(5), 4);
    if (b.length() < 2) continue;
    std::vector<int> idx;
    for (int i = 0; i < b.length(); ++i) {
      if (rng.next_below(2)) idx.push_back(i);
    }
    if (!idx.empty()) CHECK(sub_blockade(b, idx).width() >= b.width());
    std::vector<Bits> shrunk;
    for (int i = 0; i < b.length(); ++i) {
      Bits s(24);
      auto members = b.block(i).to_vector();
      int keep = 1 + rng.next_below(static_cast<int>(members.size()));
      for (int j = 0; j < keep; ++j) s.set(members[j]);
      shrunk.push_back(s);
    }
    CHECK(contraction(b, shrunk).width() <= b.width());
  }
}

TEST_CASE("minor relation") {
  auto b = sample_blockade(9, {{0, 1}, {2, 3, 4}, {5, 6, 7, 8}});
  CHECK(is_minor_of(sub_blockade(b, {0, 2}), b));
  auto shrunk = contraction(b, {Bits::of(9, {1}), Bits::of(9, {2, 3}), b.block(2)});
  CHECK(is_minor_of(shrunk, b));
  CHECK(is_minor_of(b, b));  // reflexive

  // a block with a vertex outside every block of b
  auto stray = sample_blockade(9, {{0, 1}, {2, 3, 4}, {5, 6, 7}});
  Blockade bb = sample_blockade(9, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_minor_of(sample_blockade(9, {{8}}), bb));

  // order matters: swapped blocks are not an order-preserving minor
  auto swapped = sample_blockade(9, {{2}, {0}});
  CHECK_FALSE(is_minor_of(swapped, b));
  (void)stray;
}

TEST_CASE("minor transitivity over random chains") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    Blockade b = random_blockade(rng, 30, 3 + rng.next_below(4), 4);
    if (b.length() < 3) continue;
    // sub-blockade then contraction
    std::vector<int> idx;
    for (int i = 0; i < b.length(); ++i) {
      if (rng.next_below(3)) idx.push_back(i);
    }
    if (idx.empty()) idx.push_back(0);
    Blockade s1 = sub_blockade(b, idx);
    std::vector<Bits> shrunk;
    for (int i = 0; i < s1.length(); ++i) {
      auto members = s1.block(i).to_vector();
      Bits s(30);
      int keep = 1 + rng.next_below(static_cast<int>(members.size()));
      for (int j = 0; j < keep; ++j) s.set(members[j]);
      shrunk.push_back(s);
    }
    Blockade s2 = contraction(s1, shrunk);
    CHECK(is_minor_of(s1, b));
    CHECK(is_minor_of(s2, s1));
    CHECK(is_minor_of(s2, b));  // transitivity
  }
}

TEST_CASE("pure pairs") {
  // complete bipartite: sides are complete to each other
  Graph kb(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(is_pure_pair(kb, Bits::of(5, {0, 1, 2}), Bits::of(5, {3, 4})) == Purity::Complete);

  Graph two_comp(4, {{0, 1}, {2, 3}});
  CHECK(is_pure_pair(two_comp, Bits::of(4, {0, 1}), Bits::of(4, {2, 3})) ==
        Purity::Anticomplete);

  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(is_pure_pair(p4, Bits::of(4, {0, 1}), Bits::of(4, {2, 3})).has_value());

  CHECK_THROWS_AS(is_pure_pair(p4, Bits::of(4, {0, 1}), Bits::of(4, {1, 2})),
                  PreconditionError);
  CHECK_THROWS_AS(is_pure_pair(p4, Bits(4), Bits::of(4, {1})), PreconditionError);
}

TEST_CASE("patterns") {
  Graph edgeless(6, {});
  auto b = sample_blockade(6, {{0, 1}, {2, 3}, {4, 5}});
  auto pat = pattern(edgeless, b);
  REQUIRE(pat);
  CHECK(pat->size() == 3);
  CHECK(pat->edge_count() == 0);

  // complete tripartite on its parts: complete pattern
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 2; ++u) {
    for (int v = 2; v < 4; ++v) edges.emplace_back(u, v);
  }
  for (int u = 0; u < 2; ++u) {
    for (int v = 4; v < 6; ++v) edges.emplace_back(u, v);
  }
  for (int u = 2; u < 4; ++u) {
    for (int v = 4; v < 6; ++v) edges.emplace_back(u, v);
  }
  Graph tripartite(6, edges);
  pat = pattern(tripartite, b);
  REQUIRE(pat);
  CHECK(pat->edge_count() == 3);

  Graph mixed(6, {{0, 2}});
  CHECK_FALSE(pattern(mixed, b).has_value());

  // a pattern implies every unordered block pair is classified
  for (int i = 0; i < b.length(); ++i) {
    for (int j = i + 1; j < b.length(); ++j) {
      CHECK(is_pure_pair(tripartite, b.block(i), b.block(j)).has_value());
    }
  }
}

TEST_CASE("blockade json") {
  auto b = sample_blockade(6, {{0, 1}, {2, 3}, {4, 5}});
  CHECK(blockade_from_json(blockade_to_json(b), 6) == b);
  CHECK_THROWS_AS(blockade_from_json("{\"blocks\": [[0],[0]]}", 3), Error);
  CHECK_THROWS_AS(blockade_from_json("{\"blocks\": [[9]]}", 3), Error);
  CHECK_THROWS_AS(blockade_from_json("{\"blocks\": [[]]}", 3), Error);
}
