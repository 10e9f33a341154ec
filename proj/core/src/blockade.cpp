#include "combgraph/blockade.hpp"

#include <string>

#include "combgraph/errors.hpp"

namespace combgraph {

Blockade::Blockade(int universe, std::vector<Bits> blocks)
    : universe_(universe), blocks_(std::move(blocks)) {
  Bits seen(universe);
  for (size_t i = 0; i < blocks_.size(); ++i) {
    const Bits& blk = blocks_[i];
    if (blk.universe() != universe) {
      throw PreconditionError("blockade: block universe mismatch");
    }
    if (blk.empty()) {
      throw PreconditionError("blockade: empty block at index " + std::to_string(i));
    }
    if (seen.intersects(blk)) {
      throw PreconditionError("blockade: blocks are not pairwise disjoint (index " +
                              std::to_string(i) + ")");
    }
    seen |= blk;
  }
}

int Blockade::width() const {
  if (blocks_.empty()) throw PreconditionError("blockade: width of empty blockade");
  int w = blocks_[0].count();
  for (const auto& blk : blocks_) w = std::min(w, blk.count());
  return w;
}

Bits Blockade::union_all() const {
  Bits u(universe_);
  for (const auto& blk : blocks_) u |= blk;
  return u;
}

int Blockade::block_of(int v) const {
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].test(v)) return static_cast<int>(i);
  }
  return -1;
}

int Blockade::total_vertices() const {
  int t = 0;
  for (const auto& blk : blocks_) t += blk.count();
  return t;
}

Blockade sub_blockade(const Blockade& b, const std::vector<int>& indices) {
  if (indices.empty()) throw PreconditionError("sub_blockade: empty index set");
  std::vector<Bits> picked;
  int prev = -1;
  for (int i : indices) {
    if (i < 0 || i >= b.length()) {
      throw PreconditionError("sub_blockade: index out of range: " + std::to_string(i));
    }
    if (i <= prev) throw PreconditionError("sub_blockade: indices must be strictly increasing");
    prev = i;
    picked.push_back(b.block(i));
  }
  return Blockade(b.universe(), std::move(picked));
}

Blockade contraction(const Blockade& b, const std::vector<Bits>& shrunk) {
  if (static_cast<int>(shrunk.size()) != b.length()) {
    throw PreconditionError("contraction: need one subset per block");
  }
  for (int i = 0; i < b.length(); ++i) {
    if (shrunk[i].empty()) {
      throw PreconditionError("contraction: empty block at index " + std::to_string(i));
    }
    if (!shrunk[i].is_subset_of(b.block(i))) {
      throw PreconditionError("contraction: block " + std::to_string(i) +
                              " is not a subset of the original");
    }
  }
  return Blockade(b.universe(), shrunk);
}

bool is_minor_of(const Blockade& candidate, const Blockade& b) {
  if (candidate.universe() != b.universe()) return false;
  // Greedy earliest match preserves feasibility for order-preserving embedding.
  int next = 0;
  for (int j = 0; j < candidate.length(); ++j) {
    bool placed = false;
    for (int i = next; i < b.length(); ++i) {
      if (candidate.block(j).is_subset_of(b.block(i))) {
        next = i + 1;
        placed = true;
        break;
      }
    }
    if (!placed) return false;
  }
  return true;
}

std::optional<Purity> is_pure_pair(const Graph& g, const Bits& a, const Bits& b) {
  if (a.empty() || b.empty()) throw PreconditionError("is_pure_pair: empty side");
  if (a.intersects(b)) throw PreconditionError("is_pure_pair: sides overlap");
  int cross = 0;
  a.for_each([&](int x) { cross += (g.neighbors(x) & b).count(); });
  if (cross == 0) return Purity::Anticomplete;
  if (cross == a.count() * b.count()) return Purity::Complete;
  return std::nullopt;
}

std::optional<Graph> pattern(const Graph& g, const Blockade& b) {
  int t = b.length();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      auto purity = is_pure_pair(g, b.block(i), b.block(j));
      if (!purity) return std::nullopt;
      if (*purity == Purity::Complete) edges.emplace_back(i, j);
    }
  }
  return Graph(t, edges);
}

bool is_equicardinal(const Blockade& b) {
  for (int i = 1; i < b.length(); ++i) {
    if (b.block(i).count() != b.block(0).count()) return false;
  }
  return true;
}

}  // namespace combgraph
