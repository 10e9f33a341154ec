#ifndef COMBGRAPH_BLOCKADE_HPP
#define COMBGRAPH_BLOCKADE_HPP

#include <optional>
#include <vector>

#include "combgraph/bits.hpp"
#include "combgraph/graph.hpp"

namespace combgraph {

// Ordered sequence of pairwise disjoint nonempty vertex blocks over a host
// universe. Length = number of blocks, width = smallest block size. Blocks
// are indexed 0-based.
class Blockade {
 public:
  Blockade() = default;
  Blockade(int universe, std::vector<Bits> blocks);

  int universe() const { return universe_; }
  int length() const { return static_cast<int>(blocks_.size()); }
  int width() const;  // throws on an empty blockade
  const Bits& block(int i) const { return blocks_[i]; }
  const std::vector<Bits>& blocks() const { return blocks_; }
  Bits union_all() const;
  int block_of(int v) const;  // -1 when v lies in no block
  int total_vertices() const;

  bool operator==(const Blockade& o) const = default;

 private:
  int universe_ = 0;
  std::vector<Bits> blocks_;
};

Blockade sub_blockade(const Blockade& b, const std::vector<int>& indices);
Blockade contraction(const Blockade& b, const std::vector<Bits>& shrunk);

// True iff there is an order-preserving injection of candidate's blocks into
// b's blocks with each candidate block contained in its image.
bool is_minor_of(const Blockade& candidate, const Blockade& b);

enum class Purity { Complete, Anticomplete };
std::optional<Purity> is_pure_pair(const Graph& g, const Bits& a, const Bits& b);

// Pattern graph on block indices when every block pair is pure.
std::optional<Graph> pattern(const Graph& g, const Blockade& b);

bool is_equicardinal(const Blockade& b);

}  // namespace combgraph

#endif
