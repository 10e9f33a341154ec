#ifndef COMBGRAPH_COGRAPH_HPP
#define COMBGRAPH_COGRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "combgraph/bits.hpp"
#include "combgraph/graph.hpp"

namespace combgraph {

// Decomposition tree of a cograph: leaves are vertices, internal nodes are
// disjoint unions or joins of their children.
struct Cotree {
  enum class Kind { Leaf, Union, Join };
  Kind kind = Kind::Leaf;
  int vertex = -1;  // leaves only
  std::vector<Cotree> children;

  int leaf_count() const;
  Bits leaves(int universe) const;
  std::string to_string() const;  // e.g. "union(join(0,1),2)"
};

// Graph with exactly the edges the cotree describes; leaf ids must be < n.
Graph evaluate_cotree(const Cotree& c, int n);

// Recognition by complement reduction: a single vertex is a cograph; a
// disconnected graph is the union of its components; a graph with
// disconnected complement is the join of its co-components; anything else is
// not a cograph. Returns the decomposition when g is one. Throws on n = 0.
std::optional<Cotree> is_cograph(const Graph& g);

struct Homogeneous {
  Bits members;
  bool clique = false;  // false: anticlique
};
// Clique or anticlique of the evaluated graph with >= ceil(sqrt(#leaves))
// vertices, extracted by recursion on the cotree.
Homogeneous homogeneous_in_cograph(const Cotree& c, int universe);

struct CographLimits {
  int largest_max_n = 24;
  int tau_max_n = 14;
};

// Maximum-cardinality vertex set inducing a cograph; ties resolved to the
// lexicographically smallest set. Exponential; refuses above the limit.
Bits largest_cograph(const Graph& g, const CographLimits& limits = {});

struct TauVerdict {
  enum class Kind { Critical, TooBigCograph, SubgraphViolates };
  Kind kind = Kind::Critical;
  Bits witness;          // offending cograph or subgraph vertex set
  bool boundary = false; // some size landed within 1e-9 of a |X|^tau threshold
};

// critical iff the largest induced cograph has size < n^tau while every
// proper induced subgraph G' contains a cograph of size >= |G'|^tau.
TauVerdict is_tau_critical(const Graph& g, double tau, const CographLimits& limits = {});

}  // namespace combgraph

#endif
