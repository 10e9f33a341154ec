#include "combgraph/k2.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "combgraph/errors.hpp"

namespace combgraph {

namespace {

// Pool vertices usable as witness of pair (i,j) within `tuple`.
Bits pair_candidates(const Graph& g, std::span<const int> tuple, int i, int j,
                     const Bits& pool) {
  Bits cand = pool & g.neighbors(tuple[i]) & g.neighbors(tuple[j]);
  for (size_t m = 0; m < tuple.size(); ++m) {
    if (static_cast<int>(m) == i || static_cast<int>(m) == j) continue;
    cand -= g.neighbors(tuple[m]);
  }
  return cand;
}

bool assign_distinct(const std::vector<Bits>& cands, size_t at, Bits& used,
                     std::vector<int>& chosen) {
  if (at == cands.size()) return true;
  Bits avail = cands[at] - used;
  bool ok = false;
  avail.for_each([&](int w) {
    if (ok) return;
    used.set(w);
    chosen.push_back(w);
    if (assign_distinct(cands, at + 1, used, chosen)) {
      ok = true;
      return;
    }
    chosen.pop_back();
    used.reset(w);
  });
  return ok;
}

std::uint64_t tuple_count_cap(int n, int k) {
  // C(n, k), saturating
  long double c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  if (c > 1e18L) return ~0ULL;
  return static_cast<std::uint64_t>(c);
}

}  // namespace

std::optional<WitnessMap> find_k2_witnesses(const Graph& g, std::span<const int> tuple,
                                            const Bits& pool, const K2Options& opts) {
  int k = static_cast<int>(tuple.size());
  if (k < 2) throw PreconditionError("find_k2_witnesses: need k >= 2");
  for (size_t i = 0; i < tuple.size(); ++i) {
    for (size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] == tuple[j]) {
        throw PreconditionError("find_k2_witnesses: duplicate tuple entry " +
                                std::to_string(tuple[i]));
      }
    }
  }
  std::vector<std::pair<int, int>> pairs;
  std::vector<Bits> cands;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      Bits c = pair_candidates(g, tuple, i, j, pool);
      if (opts.strict_distinct) {
        for (int t : tuple) {
          if (c.test(t)) c.reset(t);
        }
      }
      if (c.empty()) return std::nullopt;
      pairs.emplace_back(i, j);
      cands.push_back(std::move(c));
    }
  }
  WitnessMap map;
  map.k = k;
  if (!opts.strict_distinct) {
    for (size_t p = 0; p < pairs.size(); ++p) map.witnesses[pairs[p]] = cands[p].first();
    return map;
  }
  Bits used(g.size());
  std::vector<int> chosen;
  if (!assign_distinct(cands, 0, used, chosen)) return std::nullopt;
  for (size_t p = 0; p < pairs.size(); ++p) map.witnesses[pairs[p]] = chosen[p];
  return map;
}

bool is_rainbow_tuple(const Blockade& b, std::span<const int> tuple, const K2Options& opts) {
  if (opts.literal_rainbow) {
    for (size_t i = 0; i < tuple.size(); ++i) {
      for (size_t j = 0; j < tuple.size(); ++j) {
        if (i == j) continue;
        int bi = b.block_of(tuple[i]);
        int bj = b.block_of(tuple[j]);
        if (bi < 0 || bj < 0 || bi == bj) return false;
      }
    }
    return true;
  }
  std::vector<int> seen;
  for (int v : tuple) {
    int blk = b.block_of(v);
    if (blk < 0) return false;
    if (std::find(seen.begin(), seen.end(), blk) != seen.end()) return false;
    seen.push_back(blk);
  }
  return true;
}

namespace {

// Enumerate ascending k-subsets of `universe`, invoking f until it returns
// true; returns whether f ever did.
bool for_each_combination(const std::vector<int>& universe, int k,
                          const std::function<bool(const std::vector<int>&)>& f) {
  int n = static_cast<int>(universe.size());
  if (k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> tuple(k);
  while (true) {
    for (int i = 0; i < k; ++i) tuple[i] = universe[idx[i]];
    if (f(tuple)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<RainbowViolation> is_rainbow_k2_free(const Graph& g, const Blockade& b,
                                                   int k, const K2Options& opts) {
  if (k < 2) throw PreconditionError("is_rainbow_k2_free: need k >= 2");
  Bits pool = b.union_all();
  if (k == 2) {
    // A violating pair exists iff some pool vertex has pool-neighbours in two
    // distinct blocks (no negative constraints at k = 2), so freeness is
    // decidable in one sweep at any size. The tuple enumeration below runs
    // only to report the lexicographically least violation.
    std::vector<int> block_id(g.size(), -1);
    for (int i = 0; i < b.length(); ++i) {
      b.block(i).for_each([&](int v) { block_id[v] = i; });
    }
    bool witnessed = false;
    pool.for_each([&](int w) {
      if (witnessed) return;
      int first = -1;
      (g.neighbors(w) & pool).for_each([&](int y) {
        if (first < 0) {
          first = block_id[y];
        } else if (block_id[y] != first) {
          witnessed = true;
        }
      });
    });
    if (!witnessed) return std::nullopt;
  }
  std::vector<int> verts = pool.to_vector();
  if (tuple_count_cap(static_cast<int>(verts.size()), k) > opts.budget) {
    throw SizeCapError("is_rainbow_k2_free: tuple enumeration exceeds budget");
  }
  std::optional<RainbowViolation> hit;
  for_each_combination(verts, k, [&](const std::vector<int>& tuple) {
    if (!is_rainbow_tuple(b, tuple, opts)) return false;
    auto wit = find_k2_witnesses(g, tuple, pool, opts);
    if (!wit) return false;
    hit = RainbowViolation{tuple, std::move(*wit)};
    return true;
  });
  return hit;
}

StrongVerdict is_strongly_k2_free(const Graph& g, int k, const K2Options& opts) {
  if (k < 2) throw PreconditionError("is_strongly_k2_free: need k >= 2");
  std::vector<int> verts(g.size());
  for (int i = 0; i < g.size(); ++i) verts[i] = i;
  if (tuple_count_cap(g.size(), k) > opts.budget) {
    throw SizeCapError("is_strongly_k2_free: tuple enumeration exceeds budget");
  }
  StrongVerdict verdict;
  Bits pool = Bits::full(g.size());
  bool found = for_each_combination(verts, k, [&](const std::vector<int>& tuple) {
    auto wit = find_k2_witnesses(g, tuple, pool, opts);
    if (!wit) return false;
    verdict = {StrongVerdict::Kind::ViolationInG, tuple, std::move(*wit)};
    return true;
  });
  if (found) return verdict;
  Graph co = complement(g);
  found = for_each_combination(verts, k, [&](const std::vector<int>& tuple) {
    auto wit = find_k2_witnesses(co, tuple, pool, opts);
    if (!wit) return false;
    verdict = {StrongVerdict::Kind::ViolationInComplement, tuple, std::move(*wit)};
    return true;
  });
  if (found) return verdict;
  return {StrongVerdict::Kind::Free, {}, {}};
}

}  // namespace combgraph
