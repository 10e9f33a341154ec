#include "combgraph/graph.hpp"

#include <string>

#include "combgraph/errors.hpp"

namespace combgraph {

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw PreconditionError("graph: negative vertex count");
  adj_.assign(n, Bits(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw PreconditionError("graph: edge endpoint out of range: (" +
                              std::to_string(u) + "," + std::to_string(v) + ")");
    }
    if (u == v) {
      throw PreconditionError("graph: self-loop at vertex " + std::to_string(u));
    }
    adj_[u].set(v);
    adj_[v].set(u);
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

Graph complement(const Graph& g) {
  Graph h;
  h.n_ = g.n_;
  h.adj_.reserve(g.n_);
  for (int v = 0; v < g.n_; ++v) {
    Bits row = ~g.adj_[v];
    row.reset(v);
    h.adj_.push_back(std::move(row));
  }
  return h;
}

Induced induced(const Graph& g, const Bits& x) {
  Induced out;
  out.vertices = x.to_vector();
  int m = static_cast<int>(out.vertices.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (g.adjacent(out.vertices[i], out.vertices[j])) edges.emplace_back(i, j);
    }
  }
  out.graph = Graph(m, edges);
  return out;
}

Bits neighborhood(const Graph& g, int a, const Bits& x) {
  return g.neighbors(a) & x;
}

MaxDegree max_degree_in(const Graph& g, const Bits& x) {
  if (x.empty()) throw PreconditionError("max_degree_in: empty vertex set");
  MaxDegree best{-1, -1};
  x.for_each([&](int v) {
    int d = (g.neighbors(v) & x).count();
    if (d > best.degree) best = {v, d};
  });
  return best;
}

Bits full_set(const Graph& g) { return Bits::full(g.size()); }

}  // namespace combgraph
