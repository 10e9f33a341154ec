#include "combgraph/cograph.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "combgraph/errors.hpp"
#include "combgraph/threshold.hpp"

namespace combgraph {

int Cotree::leaf_count() const {
  if (kind == Kind::Leaf) return 1;
  int c = 0;
  for (const auto& ch : children) c += ch.leaf_count();
  return c;
}

Bits Cotree::leaves(int universe) const {
  Bits out(universe);
  if (kind == Kind::Leaf) {
    out.set(vertex);
    return out;
  }
  for (const auto& ch : children) out |= ch.leaves(universe);
  return out;
}

std::string Cotree::to_string() const {
  if (kind == Kind::Leaf) return std::to_string(vertex);
  std::string s = kind == Kind::Union ? "union(" : "join(";
  for (size_t i = 0; i < children.size(); ++i) {
    if (i) s += ",";
    s += children[i].to_string();
  }
  return s + ")";
}

namespace {

void collect_edges(const Cotree& c, int n, std::vector<std::pair<int, int>>& edges,
                   Bits& leaves_out) {
  if (c.kind == Cotree::Kind::Leaf) {
    if (c.vertex < 0 || c.vertex >= n) throw PreconditionError("cotree: leaf out of range");
    if (leaves_out.test(c.vertex)) throw PreconditionError("cotree: repeated leaf");
    leaves_out.set(c.vertex);
    return;
  }
  std::vector<Bits> child_sets;
  for (const auto& ch : c.children) {
    Bits sub(n);
    collect_edges(ch, n, edges, sub);
    child_sets.push_back(sub);
    leaves_out |= sub;
  }
  if (c.kind == Cotree::Kind::Join) {
    for (size_t i = 0; i < child_sets.size(); ++i) {
      for (size_t j = i + 1; j < child_sets.size(); ++j) {
        child_sets[i].for_each([&](int u) {
          child_sets[j].for_each([&](int v) { edges.emplace_back(u, v); });
        });
      }
    }
  }
}

// Connected components of g restricted to `set`, in order of smallest member.
std::vector<Bits> components_within(const Graph& g, const Bits& set, bool in_complement) {
  std::vector<Bits> comps;
  Bits remaining = set;
  while (!remaining.empty()) {
    int start = remaining.first();
    Bits comp(g.size());
    std::vector<int> stack{start};
    comp.set(start);
    remaining.reset(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      Bits nbrs = in_complement ? (remaining - g.neighbors(v)) : (g.neighbors(v) & remaining);
      nbrs.for_each([&](int w) {
        comp.set(w);
        stack.push_back(w);
      });
      remaining -= nbrs;
    }
    comps.push_back(comp);
  }
  return comps;
}

std::optional<Cotree> decompose(const Graph& g, const Bits& set) {
  if (set.count() == 1) {
    Cotree leaf;
    leaf.kind = Cotree::Kind::Leaf;
    leaf.vertex = set.first();
    return leaf;
  }
  auto comps = components_within(g, set, false);
  if (comps.size() > 1) {
    Cotree node;
    node.kind = Cotree::Kind::Union;
    for (const auto& c : comps) {
      auto child = decompose(g, c);
      if (!child) return std::nullopt;
      node.children.push_back(std::move(*child));
    }
    return node;
  }
  auto cocomps = components_within(g, set, true);
  if (cocomps.size() > 1) {
    Cotree node;
    node.kind = Cotree::Kind::Join;
    for (const auto& c : cocomps) {
      auto child = decompose(g, c);
      if (!child) return std::nullopt;
      node.children.push_back(std::move(*child));
    }
    return node;
  }
  return std::nullopt;
}

}  // namespace

Graph evaluate_cotree(const Cotree& c, int n) {
  std::vector<std::pair<int, int>> edges;
  Bits leaves(n);
  collect_edges(c, n, edges, leaves);
  return Graph(n, edges);
}

std::optional<Cotree> is_cograph(const Graph& g) {
  if (g.size() == 0) throw PreconditionError("is_cograph: empty graph (the family starts at single vertices)");
  return decompose(g, Bits::full(g.size()));
}

namespace {

struct HomPair {
  Bits clique;
  Bits anticlique;
};

HomPair hom_rec(const Cotree& c, int universe) {
  if (c.kind == Cotree::Kind::Leaf) {
    Bits one(universe);
    one.set(c.vertex);
    return {one, one};
  }
  HomPair acc{Bits(universe), Bits(universe)};
  Bits best_single(universe);
  int best_size = -1;
  for (const auto& ch : c.children) {
    HomPair sub = hom_rec(ch, universe);
    if (c.kind == Cotree::Kind::Union) {
      acc.anticlique |= sub.anticlique;
      if (sub.clique.count() > best_size) {
        best_size = sub.clique.count();
        best_single = sub.clique;
      }
    } else {
      acc.clique |= sub.clique;
      if (sub.anticlique.count() > best_size) {
        best_size = sub.anticlique.count();
        best_single = sub.anticlique;
      }
    }
  }
  if (c.kind == Cotree::Kind::Union) {
    acc.clique = best_single;
  } else {
    acc.anticlique = best_single;
  }
  return acc;
}

}  // namespace

Homogeneous homogeneous_in_cograph(const Cotree& c, int universe) {
  HomPair p = hom_rec(c, universe);
  // clique_size * anticlique_size >= leaf count at every node, so the larger
  // side reaches ceil(sqrt(m)).
  if (p.clique.count() >= p.anticlique.count()) return {p.clique, true};
  return {p.anticlique, false};
}

namespace {

// Induced path on four vertices inside X, or empty when none. The scan order
// is fixed so results are deterministic.
std::vector<int> find_p4(const Graph& g, const Bits& x) {
  std::vector<int> verts = x.to_vector();
  for (int b : verts) {
    Bits nb = g.neighbors(b) & x;
    for (int c : nb.to_vector()) {
      if (c == b) continue;
      // a adjacent to b, not to c; d adjacent to c, not to b; a,d non-adjacent
      Bits a_cands = (g.neighbors(b) & x) - g.neighbors(c);
      a_cands.reset(c);
      Bits d_cands = (g.neighbors(c) & x) - g.neighbors(b);
      d_cands.reset(b);
      if (a_cands.empty() || d_cands.empty()) continue;
      bool found = false;
      std::vector<int> result;
      a_cands.for_each([&](int a) {
        if (found) return;
        Bits ds = d_cands - g.neighbors(a);
        ds.reset(a);
        if (!ds.empty()) {
          result = {a, b, c, ds.first()};
          found = true;
        }
      });
      if (found) return result;
    }
  }
  return {};
}

bool lex_less(const Bits& a, const Bits& b) {
  auto va = a.to_vector();
  auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

struct LargestSearch {
  const Graph& g;
  Bits best;
  int best_size = 0;
  std::unordered_set<std::uint64_t> visited;

  std::uint64_t key(const Bits& x) const {
    std::uint64_t k = 0;
    x.for_each([&](int v) { k |= 1ULL << v; });
    return k;
  }

  void run(const Bits& x) {
    if (x.count() < best_size) return;
    if (!visited.insert(key(x)).second) return;
    auto p4 = find_p4(g, x);
    if (p4.empty()) {
      int sz = x.count();
      if (sz > best_size || (sz == best_size && lex_less(x, best))) {
        best = x;
        best_size = sz;
      }
      return;
    }
    for (int v : p4) {
      Bits next = x;
      next.reset(v);
      run(next);
    }
  }
};

}  // namespace

Bits largest_cograph(const Graph& g, const CographLimits& limits) {
  if (g.size() < 1) throw PreconditionError("largest_cograph: need n >= 1");
  if (g.size() > limits.largest_max_n) {
    throw SizeCapError("largest_cograph: n = " + std::to_string(g.size()) +
                       " exceeds search limit " + std::to_string(limits.largest_max_n));
  }
  LargestSearch search{g, Bits(g.size()), 0, {}};
  search.run(Bits::full(g.size()));
  return search.best;
}

namespace {

// max induced-cograph size for every subset, n <= tau_max_n
std::vector<int> max_cograph_table(const Graph& g) {
  int n = g.size();
  std::vector<int> table(std::size_t(1) << n, 0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Bits x(n);
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) x.set(v);
    }
    if (find_p4(g, x).empty()) {
      table[mask] = x.count();
      continue;
    }
    int best = 0;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) best = std::max(best, table[mask & ~(1u << v)]);
    }
    table[mask] = best;
  }
  return table;
}

}  // namespace

TauVerdict is_tau_critical(const Graph& g, double tau, const CographLimits& limits) {
  int n = g.size();
  if (n < 1) throw PreconditionError("is_tau_critical: need n >= 1");
  if (n > limits.tau_max_n) {
    throw SizeCapError("is_tau_critical: n = " + std::to_string(n) +
                       " exceeds search limit " + std::to_string(limits.tau_max_n));
  }
  TauVerdict verdict;
  Bits big = largest_cograph(g, limits);
  auto cmp = guarded_ge(big.count(), std::pow(double(n), tau));
  verdict.boundary = cmp.boundary;
  if (cmp.ge) {
    verdict.kind = TauVerdict::Kind::TooBigCograph;
    verdict.witness = big;
    return verdict;
  }
  auto table = max_cograph_table(g);
  std::uint32_t full = (n == 32 ? ~0u : (1u << n) - 1);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    int sz = std::popcount(mask);
    auto sub = guarded_ge(table[mask], std::pow(double(sz), tau));
    verdict.boundary = verdict.boundary || sub.boundary;
    if (!sub.ge) {
      verdict.kind = TauVerdict::Kind::SubgraphViolates;
      Bits x(n);
      for (int v = 0; v < n; ++v) {
        if (mask >> v & 1) x.set(v);
      }
      verdict.witness = x;
      return verdict;
    }
  }
  verdict.kind = TauVerdict::Kind::Critical;
  verdict.witness = Bits(n);
  return verdict;
}

}  // namespace combgraph
