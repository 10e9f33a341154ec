#ifndef COMBGRAPH_COMB_HPP
#define COMBGRAPH_COMB_HPP

#include <optional>
#include <utility>
#include <vector>

#include "combgraph/bits.hpp"
#include "combgraph/graph.hpp"

namespace combgraph {

// (t, k)-comb: t distinct apexes, each complete to its own tooth set and with
// no neighbour in any other tooth; teeth pairwise disjoint, disjoint from the
// apexes, each of size >= width_floor.
struct Comb {
  std::vector<std::pair<int, Bits>> pairs;  // (apex, teeth)
  double width_floor = 0;

  int length() const { return static_cast<int>(pairs.size()); }
  int min_tooth() const;
};

bool validate_comb(const Graph& g, const Comb& c);
// Additionally requires apexes in c_side and teeth inside d_side.
bool validate_comb_in(const Graph& g, const Comb& c, const Bits& c_side, const Bits& d_side);

struct Layer {
  std::vector<int> apexes;
  std::vector<Bits> teeth;  // teeth[i] = fresh neighbours of apexes[i]
};

struct CombLayers {
  double delta = 0;
  std::vector<Layer> layers;
  Bits covered;   // union of all teeth
  Bits residual;  // d_set minus covered
};

struct LayerPolicy {
  bool stop_at_empty_layer = true;  // default operation contract
  int max_layers = -1;              // cap on the number of layers, -1 = none
};

// Greedy layered teeth construction on (c, d_set): at layer s an apex needs
// >= (2/3)^s * delta fresh neighbours in the residual; its tooth is that
// fresh set. delta must dominate every |E(a, d_set)|, a in c.
CombLayers build_layers(const Graph& g, const Bits& c, const Bits& d_set, double delta,
                        const LayerPolicy& policy = {});

struct BoundCertificate {
  int b_size = 0;
  int delta = 0;
  double gamma = 0;
  double d = 0;
  double bound = 0;  // 3^(d+1)/(3/2-(3/2)^d) * gamma^d * delta^(1-d)
};

struct CombOrBound {
  std::optional<Comb> comb;
  std::optional<BoundCertificate> bound;
};

// Dichotomy on a bipartite split (a_side, b_side) where every b_side vertex
// has a neighbour in a_side: either a (t, gamma * t^(-1/d))-comb for some
// t >= 1, or |b_side| is at most the closed-form bound. Exactly one branch is
// returned and the returned branch always re-validates.
CombOrBound comb_or_bound(const Graph& g, const Bits& a_side, const Bits& b_side,
                          double gamma, double d);

struct WgLimits {
  int max_n = 12;
};

// Minimal width over equicardinal teeth blockades of (s, |G|/s^2)-combs lying
// inside some vertex's (neighbourhood, non-neighbourhood) split of g or of
// its complement; |G| when no such comb exists.
int compute_w_g(const Graph& g, const WgLimits& limits = {});

}  // namespace combgraph

#endif
