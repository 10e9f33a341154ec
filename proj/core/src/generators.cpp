#include "combgraph/generators.hpp"

#include <algorithm>
#include <string>

#include "combgraph/errors.hpp"
#include "combgraph/k2.hpp"

namespace combgraph {

GenKind gen_kind_from_string(const std::string& s) {
  if (s == "gnp") return GenKind::Gnp;
  if (s == "cograph-random") return GenKind::CographRandom;
  if (s == "planted-comb") return GenKind::PlantedComb;
  if (s == "rainbow-free-rejection") return GenKind::RainbowFreeRejection;
  throw PreconditionError("unknown generator kind: " + s);
}

namespace {

Graph gen_gnp(int n, double p, SplitMix64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_double() < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Cotree random_cotree(int leaves, double join_bias, SplitMix64& rng, int& next_vertex) {
  if (leaves == 1) {
    Cotree leaf;
    leaf.kind = Cotree::Kind::Leaf;
    leaf.vertex = next_vertex++;
    return leaf;
  }
  int left = 1 + rng.next_below(leaves - 1);
  Cotree node;
  node.kind = rng.next_double() < join_bias ? Cotree::Kind::Join : Cotree::Kind::Union;
  node.children.push_back(random_cotree(left, join_bias, rng, next_vertex));
  node.children.push_back(random_cotree(leaves - left, join_bias, rng, next_vertex));
  return node;
}

Generated gen_cograph(const GeneratorSpec& spec, SplitMix64& rng) {
  if (spec.leaves < 1) throw PreconditionError("cograph-random: need leaves >= 1");
  int next_vertex = 0;
  Cotree tree = random_cotree(spec.leaves, spec.join_bias, rng, next_vertex);
  Generated out;
  out.graph = evaluate_cotree(tree, spec.leaves);
  out.cotree = std::move(tree);
  return out;
}

Generated gen_planted(const GeneratorSpec& spec, SplitMix64& rng) {
  int m = spec.teeth;
  int w = spec.tooth_size;
  if (m < 1 || w < 1) throw PreconditionError("planted-comb: need teeth, tooth-size >= 1");
  int pad = std::max(0, w + 2 - m);  // keeps the center the strict max-degree vertex
  int n = 1 + m + m * w + pad;
  const int center = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<Bits> blocks;
  Bits center_block(n);
  center_block.set(center);
  for (int i = 0; i < m; ++i) edges.emplace_back(center, 1 + i);
  std::vector<Bits> teeth_blocks;
  for (int i = 0; i < m; ++i) {
    Bits tooth(n);
    for (int j = 0; j < w; ++j) {
      int v = 1 + m + i * w + j;
      tooth.set(v);
      edges.emplace_back(1 + i, v);
    }
    teeth_blocks.push_back(tooth);
  }
  for (int j = 0; j < pad; ++j) {
    int v = 1 + m + m * w + j;
    center_block.set(v);
    edges.emplace_back(center, v);
  }
  Bits apex_block(n);
  for (int i = 0; i < m; ++i) apex_block.set(1 + i);

  Graph base(n, edges);
  if (spec.noise > 0) {
    std::vector<std::pair<int, int>> noisy = edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!base.adjacent(u, v) && rng.next_double() < spec.noise) noisy.emplace_back(u, v);
      }
    }
    base = Graph(n, noisy);
  }

  blocks.push_back(center_block);
  for (auto& t : teeth_blocks) blocks.push_back(std::move(t));
  blocks.push_back(apex_block);
  Generated out;
  out.graph = std::move(base);
  out.blockade = Blockade(n, std::move(blocks));
  return out;
}

// Proposal for rainbow (2 choose 2)-freeness: every vertex is wired into at
// most one block (its target), so no vertex can witness a cross-block pair.
Graph propose_single_target(int blocks, int block_size, double p, SplitMix64& rng) {
  int n = blocks * block_size;
  std::vector<int> target(n);
  for (int v = 0; v < n; ++v) target[v] = rng.next_below(blocks);
  auto block_of = [&](int v) { return v / block_size; };
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (target[u] == block_of(v) && target[v] == block_of(u) && rng.next_double() < p) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(n, edges);
}

Generated gen_rainbow_free(const GeneratorSpec& spec, SplitMix64& rng) {
  if (spec.k < 2) throw PreconditionError("rainbow-free-rejection: need k >= 2");
  if (spec.blocks < spec.k) {
    throw PreconditionError("rainbow-free-rejection: need at least k blocks");
  }
  int n = spec.blocks * spec.block_size;
  std::vector<Bits> blocks;
  for (int b = 0; b < spec.blocks; ++b) {
    Bits blk(n);
    for (int j = 0; j < spec.block_size; ++j) blk.set(b * spec.block_size + j);
    blocks.push_back(blk);
  }
  Blockade blockade(n, blocks);
  K2Options opts;
  for (int attempt = 1; attempt <= spec.max_attempts; ++attempt) {
    Graph g = spec.k == 2 ? propose_single_target(spec.blocks, spec.block_size,
                                                  spec.edge_prob, rng)
                          : gen_gnp(n, spec.edge_prob, rng);
    if (!is_rainbow_k2_free(g, blockade, spec.k, opts)) {
      Generated out;
      out.graph = std::move(g);
      out.blockade = blockade;
      out.attempts = attempt;
      return out;
    }
  }
  throw Error("rainbow-free-rejection: no accepted sample after " +
              std::to_string(spec.max_attempts) + " attempts");
}

}  // namespace

Generated generate(const GeneratorSpec& spec) {
  SplitMix64 rng(spec.seed);
  rng.next();
  switch (spec.kind) {
    case GenKind::Gnp: {
      if (spec.n < 0) throw PreconditionError("gnp: need n >= 0");
      if (spec.p < 0 || spec.p > 1) throw PreconditionError("gnp: need p in [0,1]");
      Generated out;
      out.graph = gen_gnp(spec.n, spec.p, rng);
      return out;
    }
    case GenKind::CographRandom:
      return gen_cograph(spec, rng);
    case GenKind::PlantedComb:
      return gen_planted(spec, rng);
    case GenKind::RainbowFreeRejection:
      return gen_rainbow_free(spec, rng);
  }
  throw Error("generate: unreachable");
}

}  // namespace combgraph
