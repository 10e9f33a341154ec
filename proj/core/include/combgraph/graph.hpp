#ifndef COMBGRAPH_GRAPH_HPP
#define COMBGRAPH_GRAPH_HPP

#include <span>
#include <utility>
#include <vector>

#include "combgraph/bits.hpp"

namespace combgraph {

// Finite simple graph on vertices 0..n-1. Adjacency is a symmetric
// anti-reflexive bit matrix; graphs are immutable after construction and safe
// to share read-only across threads.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::span<const std::pair<int, int>> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges)
      : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

  int size() const { return n_; }
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const Bits& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

  bool operator==(const Graph& o) const = default;

 private:
  int n_ = 0;
  std::vector<Bits> adj_;
  friend Graph complement(const Graph&);
};

Graph complement(const Graph& g);

struct Induced {
  Graph graph;
  std::vector<int> vertices;  // new label i -> original vertex vertices[i]
};
Induced induced(const Graph& g, const Bits& x);

// {y in x : E(a, y)}; a itself never appears (anti-reflexivity).
Bits neighborhood(const Graph& g, int a, const Bits& x);

struct MaxDegree {
  int vertex;
  int degree;
};
// Vertex of x maximizing |neighborhood(g, a, x)|, ties to the smallest index.
// Throws on empty x.
MaxDegree max_degree_in(const Graph& g, const Bits& x);

Bits full_set(const Graph& g);

}  // namespace combgraph

#endif
