#include "combgraph/oracles.hpp"

#include <algorithm>
#include <array>

#include "combgraph/errors.hpp"

namespace combgraph {

namespace {

// Bit index of pair (i, j), i < j < n, in the edge mask.
int pair_bit(int n, int i, int j) {
  int idx = 0;
  for (int a = 0; a < i; ++a) idx += n - 1 - a;
  return idx + (j - i - 1);
}

int pairs_of(int n) { return n * (n - 1) / 2; }

// Edge mask of the subgraph induced on the members of vset (ascending),
// relabeled 0..|vset|-1.
std::uint32_t induced_mask(int n, std::uint32_t mask, const std::vector<int>& vset) {
  int m = static_cast<int>(vset.size());
  std::uint32_t out = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (mask >> pair_bit(n, vset[i], vset[j]) & 1) {
        out |= 1u << pair_bit(m, i, j);
      }
    }
  }
  return out;
}

}  // namespace

CographClosure::CographClosure(int max_n) : max_n_(max_n) {
  if (max_n < 1 || max_n > 7) throw PreconditionError("CographClosure: supports 1 <= n <= 7");
  table_.resize(max_n + 1);
  table_[1] = {1};  // the one-vertex graph
  for (int n = 2; n <= max_n; ++n) {
    int bits = pairs_of(n);
    std::uint32_t count = 1u << bits;
    std::uint32_t full_edges = count - 1;
    table_[n].assign(count, 0);
    auto& cur = table_[n];

    // Precompute vertex subsets by popcount bucket once.
    std::vector<std::vector<int>> subsets;
    for (std::uint32_t vs = 1; vs < (1u << n) - 1; ++vs) {
      std::vector<int> members;
      for (int v = 0; v < n; ++v) {
        if (vs >> v & 1) members.push_back(v);
      }
      subsets.push_back(members);
    }

    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint32_t mask = 0; mask < count; ++mask) {
        if (cur[mask]) continue;
        if (cur[full_edges & ~mask]) {  // complement of a member
          cur[mask] = 1;
          changed = true;
          continue;
        }
        // Disjoint union on a complementary label split with no cross edges.
        for (const auto& members : subsets) {
          bool cross = false;
          std::vector<int> rest;
          {
            std::array<bool, 8> in{};
            for (int v : members) in[v] = true;
            for (int v = 0; v < n; ++v) {
              if (!in[v]) rest.push_back(v);
            }
            for (int u : members) {
              for (int v : rest) {
                int i = std::min(u, v), j = std::max(u, v);
                if (mask >> pair_bit(n, i, j) & 1) {
                  cross = true;
                  break;
                }
              }
              if (cross) break;
            }
          }
          if (cross) continue;
          std::uint32_t left = induced_mask(n, mask, members);
          std::uint32_t right = induced_mask(n, mask, rest);
          if (table_[members.size()][left] && table_[rest.size()][right]) {
            cur[mask] = 1;
            changed = true;
            break;
          }
        }
      }
    }
  }
}

std::uint32_t CographClosure::edge_mask_of(const Graph& g) {
  int n = g.size();
  std::uint32_t mask = 0;
  for (auto [u, v] : g.edges()) mask |= 1u << pair_bit(n, u, v);
  return mask;
}

Graph CographClosure::graph_of_mask(int n, std::uint32_t edge_mask) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (edge_mask >> pair_bit(n, i, j) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

bool CographClosure::member_mask(int n, std::uint32_t edge_mask) const {
  if (n < 1 || n > max_n_) throw PreconditionError("CographClosure: n out of range");
  return table_[n][edge_mask];
}

bool CographClosure::member(const Graph& g) const {
  return member_mask(g.size(), edge_mask_of(g));
}

}  // namespace combgraph
