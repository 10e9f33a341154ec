#ifndef COMBGRAPH_K2_HPP
#define COMBGRAPH_K2_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "combgraph/blockade.hpp"
#include "combgraph/graph.hpp"

namespace combgraph {

// Witnesses certifying the (k choose 2)-property of a k-tuple: for each pair
// i < j a vertex adjacent to tuple[i] and tuple[j] and to no other tuple
// entry. Witnesses live in the designated pool; by default they may coincide
// with each other and with tuple entries.
struct WitnessMap {
  int k = 0;
  std::map<std::pair<int, int>, int> witnesses;  // (i,j), i<j -> pool vertex
};

struct K2Options {
  bool strict_distinct = false;   // witnesses pairwise distinct and off-tuple
  bool literal_rainbow = false;   // pairwise exists-distinct-blocks reading
  std::uint64_t budget = 20'000'000;  // max enumerated tuples per oracle call
};

// Exhaustive witness search over the pool, lowest-index witness per pair.
// Throws on duplicate tuple entries or k < 2.
std::optional<WitnessMap> find_k2_witnesses(const Graph& g, std::span<const int> tuple,
                                            const Bits& pool, const K2Options& opts = {});

// Default reading: every tuple entry lies in some block and no two entries
// share a block. The literal flag checks, per pair, for distinct block
// indices hosting the two entries (equivalent on disjoint blocks).
bool is_rainbow_tuple(const Blockade& b, std::span<const int> tuple,
                      const K2Options& opts = {});

struct RainbowViolation {
  std::vector<int> tuple;
  WitnessMap witnesses;
};

// Absent when no rainbow k-tuple has the (k choose 2)-property over the union
// of blocks; otherwise the lexicographically least violating tuple.
std::optional<RainbowViolation> is_rainbow_k2_free(const Graph& g, const Blockade& b,
                                                   int k, const K2Options& opts = {});

struct StrongVerdict {
  enum class Kind { Free, ViolationInG, ViolationInComplement };
  Kind kind = Kind::Free;
  std::vector<int> tuple;
  WitnessMap witnesses;
};

// Checks all k-tuples of distinct vertices with pool V(G), in g and then in
// its complement.
StrongVerdict is_strongly_k2_free(const Graph& g, int k, const K2Options& opts = {});

}  // namespace combgraph

#endif
