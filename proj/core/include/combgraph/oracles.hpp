#ifndef COMBGRAPH_ORACLES_HPP
#define COMBGRAPH_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "combgraph/graph.hpp"

namespace combgraph {

// Brute-force closure of the cograph family over labeled graphs: single
// vertices, complements of members, and disjoint unions of members on
// complementary label sets. Independent of the recognition algorithm; used as
// its oracle.
class CographClosure {
 public:
  explicit CographClosure(int max_n);

  int max_n() const { return max_n_; }
  bool member(const Graph& g) const;
  bool member_mask(int n, std::uint32_t edge_mask) const;

  static std::uint32_t edge_mask_of(const Graph& g);
  static Graph graph_of_mask(int n, std::uint32_t edge_mask);

 private:
  int max_n_;
  std::vector<std::vector<char>> table_;  // [n][edge mask]
};

}  // namespace combgraph

#endif
