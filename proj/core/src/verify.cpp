#include "combgraph/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "combgraph/errors.hpp"
#include "combgraph/generators.hpp"
#include "combgraph/k2.hpp"
#include "combgraph/lemma.hpp"
#include "combgraph/oracles.hpp"
#include "combgraph/threshold.hpp"

namespace combgraph::verify {

namespace {

Outcome pass(std::string detail) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

bool is_homogeneous(const Graph& g, const Bits& set, bool clique) {
  auto verts = set.to_vector();
  for (size_t i = 0; i < verts.size(); ++i) {
    for (size_t j = i + 1; j < verts.size(); ++j) {
      if (g.adjacent(verts[i], verts[j]) != clique) return false;
    }
  }
  return true;
}

}  // namespace

Outcome cograph_closure_equivalence(int max_n) {
  CographClosure oracle(max_n);
  long total = 0;
  for (int n = 1; n <= max_n; ++n) {
    std::uint32_t masks = 1u << (n * (n - 1) / 2);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      Graph g = CographClosure::graph_of_mask(n, mask);
      auto tree = is_cograph(g);
      bool recognized = tree.has_value();
      if (recognized != oracle.member_mask(n, mask)) {
        std::ostringstream ss;
        ss << "disagreement at n=" << n << " mask=" << mask << " recognizer="
           << recognized;
        return fail(ss.str());
      }
      if (recognized && evaluate_cotree(*tree, n) != g) {
        std::ostringstream ss;
        ss << "cotree does not evaluate back to the graph at n=" << n << " mask=" << mask;
        return fail(ss.str());
      }
      ++total;
    }
  }
  return pass(std::to_string(total) + " labeled graphs agree");
}

Outcome homogeneous_bound_trial(std::uint64_t seed, int trial, int min_leaves,
                                int max_leaves) {
  SplitMix64 rng = SplitMix64::for_instance(seed, trial);
  GeneratorSpec spec;
  spec.kind = GenKind::CographRandom;
  spec.seed = rng.next();
  spec.leaves = min_leaves + rng.next_below(max_leaves - min_leaves + 1);
  spec.join_bias = 0.25 + 0.5 * rng.next_double();
  Generated gen = generate(spec);
  Homogeneous hom = homogeneous_in_cograph(*gen.cotree, spec.leaves);
  int need = static_cast<int>(std::ceil(std::sqrt(double(spec.leaves)) - 1e-9));
  if (hom.members.count() < need) {
    return fail("size " + std::to_string(hom.members.count()) + " below ceil(sqrt(" +
                std::to_string(spec.leaves) + ")) = " + std::to_string(need));
  }
  if (!is_homogeneous(gen.graph, hom.members, hom.clique)) {
    return fail("extracted set is not homogeneous");
  }
  return pass("m=" + std::to_string(spec.leaves) + " size=" +
              std::to_string(hom.members.count()));
}

Outcome comb_dichotomy_trial(std::uint64_t seed, int trial, int max_side) {
  SplitMix64 rng = SplitMix64::for_instance(seed, trial);
  int na = 2 + rng.next_below(max_side - 1);
  int nb = 1 + rng.next_below(max_side);
  int n = na + nb;
  Bits a_side(n), b_side(n);
  for (int v = 0; v < na; ++v) a_side.set(v);
  for (int v = na; v < n; ++v) b_side.set(v);
  std::vector<std::pair<int, int>> edges;
  double p = 0.02 + 0.4 * rng.next_double();
  for (int b = na; b < n; ++b) {
    edges.emplace_back(rng.next_below(na), b);  // every b_side vertex wired
    for (int a = 0; a < na; ++a) {
      if (rng.next_double() < p) edges.emplace_back(a, b);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Graph g(n, edges);
  double gamma = 0.5 + 7.5 * rng.next_double();
  double d = 0.25 + 0.55 * rng.next_double();

  CombOrBound res = comb_or_bound(g, a_side, b_side, gamma, d);
  if (res.comb && res.bound) return fail("both branches claimed");
  if (!res.comb && !res.bound) return fail("no branch returned");
  if (res.comb) {
    const Comb& c = *res.comb;
    if (!validate_comb_in(g, c, a_side, b_side)) return fail("comb fails validation");
    double target = gamma * std::pow(double(c.length()), -1.0 / d);
    if (!guarded_ge(c.min_tooth(), target).ge) {
      return fail("comb width " + std::to_string(c.min_tooth()) + " below gamma t^(-1/d)");
    }
    return pass("comb t=" + std::to_string(c.length()));
  }
  // Recompute the certificate quantities independently.
  int delta = 0;
  a_side.for_each([&](int a) { delta = std::max(delta, (g.neighbors(a) & b_side).count()); });
  if (res.bound->delta != delta) return fail("certificate delta mismatch");
  if (res.bound->b_size != b_side.count()) return fail("certificate |B| mismatch");
  double bound = std::pow(3.0, d + 1.0) / (1.5 - std::pow(1.5, d)) * std::pow(gamma, d) *
                 std::pow(double(delta), 1.0 - d);
  if (!guarded_ge(bound, b_side.count()).ge) {
    return fail("bound branch claimed but |B| = " + std::to_string(b_side.count()) +
                " > " + std::to_string(bound));
  }
  return pass("bound |B|=" + std::to_string(b_side.count()));
}

Outcome layer_invariants_trial(std::uint64_t seed, int trial) {
  SplitMix64 rng = SplitMix64::for_instance(seed, trial);
  int n = 10 + rng.next_below(21);
  GeneratorSpec gspec;
  gspec.kind = GenKind::Gnp;
  gspec.n = n;
  gspec.p = 0.05 + 0.6 * rng.next_double();
  gspec.seed = rng.next();
  Graph g = generate(gspec).graph;
  Bits c(n), d_set(n);
  for (int v = 0; v < n; ++v) {
    int r = rng.next_below(3);
    if (r == 0) c.set(v);
    if (r == 1) d_set.set(v);
  }
  if (c.empty() || d_set.empty()) return pass("degenerate split skipped");
  int delta = 0;
  c.for_each([&](int a) { delta = std::max(delta, (g.neighbors(a) & d_set).count()); });
  if (delta == 0) return pass("no edges into d_set");

  CombLayers layers = build_layers(g, c, d_set, delta);
  Bits covered(n);
  for (size_t si = 0; si < layers.layers.size(); ++si) {
    const Layer& layer = layers.layers[si];
    int s = static_cast<int>(si) + 1;
    for (size_t i = 0; i < layer.apexes.size(); ++i) {
      int sz = layer.teeth[i].count();
      if (!count_meets_ratio23(sz, s, delta)) {
        return fail("tooth below (2/3)^s delta at layer " + std::to_string(s));
      }
      long double upper = static_cast<long double>(delta) * powl(2.0L / 3.0L, s - 1);
      if (static_cast<long double>(sz) > upper + 1e-9L) {
        return fail("tooth above (2/3)^(s-1) delta at layer " + std::to_string(s));
      }
      // within-layer: apex i has no neighbour in a later tooth
      for (size_t j = i + 1; j < layer.teeth.size(); ++j) {
        if (g.neighbors(layer.apexes[i]).intersects(layer.teeth[j])) {
          return fail("apex adjacent to a later tooth in its layer");
        }
      }
      // across layers: apex of layer s has no neighbour in any deeper tooth
      for (size_t sj = si + 1; sj < layers.layers.size(); ++sj) {
        for (const auto& tooth : layers.layers[sj].teeth) {
          if (g.neighbors(layer.apexes[i]).intersects(tooth)) {
            return fail("apex adjacent to a tooth of a deeper layer");
          }
        }
      }
      covered |= layer.teeth[i];
    }
  }
  if (!(covered == layers.covered)) return fail("covered set mismatch");
  if (!((d_set - covered) == layers.residual)) return fail("residual mismatch");
  return pass(std::to_string(layers.layers.size()) + " layers");
}

Outcome pure_blockade_trial(std::uint64_t seed, int trial, int s) {
  SplitMix64 rng = SplitMix64::for_instance(seed, trial);
  GeneratorSpec spec;
  spec.kind = GenKind::RainbowFreeRejection;
  spec.k = 2;
  spec.seed = rng.next();
  if (s == 1) {
    spec.blocks = 4;
    spec.block_size = 1 + rng.next_below(4);
    spec.edge_prob = 0.15 + 0.5 * rng.next_double();
  } else {
    spec.blocks = static_cast<int>(d_s(s));
    spec.block_size = 2 + rng.next_below(2);
    spec.edge_prob = 0.1 + 0.3 * rng.next_double();
  }
  spec.max_attempts = 64;
  Generated gen = generate(spec);
  const Blockade& b = *gen.blockade;
  int w = b.width();

  PureBlockadeResult res = pure_blockade_from_rainbow22(gen.graph, b, s);
  if (res.blockade.length() != (1 << s)) {
    return fail("length " + std::to_string(res.blockade.length()) + " != 2^s");
  }
  double floor_w = static_cast<double>(w) / static_cast<double>(d_s(s));
  if (!guarded_ge(res.blockade.width(), floor_w).ge) {
    return fail("width " + std::to_string(res.blockade.width()) + " below W/D_s");
  }
  auto pat = pattern(gen.graph, res.blockade);
  if (!pat) return fail("output is not a pure blockade");
  if (!is_cograph(*pat)) return fail("pattern is not a cograph");
  if (evaluate_cotree(res.pattern_tree, res.blockade.length()) != *pat) {
    return fail("returned pattern cotree does not evaluate to the pattern");
  }
  return pass("W=" + std::to_string(w) + " -> width " +
              std::to_string(res.blockade.width()));
}

Outcome rainbow_minor_trial(std::uint64_t seed, int trial) {
  SplitMix64 rng = SplitMix64::for_instance(seed, trial);
  // Blocks: {a} + filler | apexes | tooth block per apex; teeth wired to their
  // apex only, apexes wired to a. Light extra noise, resampled until the
  // blockade stays rainbow (3 choose 2)-free.
  for (int attempt = 0; attempt < 32; ++attempt) {
    int m = 2 + rng.next_below(2);       // apexes
    int w = 1 + rng.next_below(2);       // tooth size
    int filler = rng.next_below(2);
    int n = 1 + filler + m + m * w;
    if (n > 14) continue;
    int a = 0;
    std::vector<std::pair<int, int>> edges;
    Bits center_block(n);
    center_block.set(a);
    for (int f = 0; f < filler; ++f) center_block.set(1 + f);
    Bits apex_block(n);
    for (int i = 0; i < m; ++i) {
      int apex = 1 + filler + i;
      apex_block.set(apex);
      edges.emplace_back(a, apex);
    }
    std::vector<Bits> teeth;
    for (int i = 0; i < m; ++i) {
      Bits tooth(n);
      for (int j = 0; j < w; ++j) {
        int v = 1 + filler + m + i * w + j;
        tooth.set(v);
        edges.emplace_back(1 + filler + i, v);
      }
      teeth.push_back(tooth);
    }
    // sparse noise among teeth vertices only (keeps the comb intact)
    for (int u = 1 + filler + m; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        bool same_tooth = false;
        for (const auto& t : teeth) {
          if (t.test(u) && t.test(v)) same_tooth = true;
        }
        if (same_tooth && rng.next_double() < 0.3) edges.emplace_back(u, v);
      }
    }
    Graph g(n, edges);
    std::vector<Bits> blocklist;
    blocklist.push_back(center_block);
    blocklist.push_back(apex_block);
    for (const auto& t : teeth) blocklist.push_back(t);
    Blockade blockade(n, blocklist);
    if (is_rainbow_k2_free(g, blockade, 3)) continue;  // violated, resample

    Comb comb;
    comb.width_floor = w;
    for (int i = 0; i < m; ++i) comb.pairs.emplace_back(1 + filler + i, teeth[i]);
    Blockade out = comb_to_rainbow_minor(g, blockade, 3, a, comb);
    if (is_rainbow_k2_free(g, out, 2)) return fail("output violates rainbow (2 choose 2)-freeness");
    if (out.length() != m) return fail("output length mismatch");
    return pass("m=" + std::to_string(m) + " w=" + std::to_string(w));
  }
  return fail("no admissible instance generated");
}

Outcome constants_bracketing() {
  LemmaConstants c = compute_constants(2, 2.0);
  if (c.k_sum != 2.0) return fail("K != 2");
  if (d_s(1) != 4) return fail("D_1 != 4");
  if (d_s(2) != 128 || d_s(3) != 4096) return fail("D_2/D_3 mismatch");

  // Independent re-evaluation of both inequalities at L0 and L0 - 1.
  auto holds = [&](long double L) {
    long double r8 = powl(L, 0.125L);
    long double r4 = powl(L, 0.25L);
    bool first = r4 >= 12.0L * r8 + 3.0L + 6.0L * (sqrtl(2.0L) + sqrtl(3.0L));
    bool second = L - 2.0L * r8 * (1.0L + 4.0L + r4) >= sqrtl(L);
    return first && second;
  };
  if (!holds(static_cast<long double>(c.l0))) return fail("inequalities fail at L0");
  if (holds(static_cast<long double>(c.l0 - 1))) return fail("inequalities already hold at L0-1");
  if (!holds(static_cast<long double>(c.l0) * 2) || !holds(static_cast<long double>(c.l0) * 16)) {
    return fail("inequalities do not persist above L0");
  }
  if (c.l0 < 1000000000LL || c.l0 > 1300000000LL) {
    return fail("L0(d=2) out of the expected 1e9 range: " + std::to_string(c.l0));
  }

  if (!(c.tau0 > 0)) return fail("tau0 not positive");
  double eps = 1e-9;
  auto tau_ok = [&](double tau) {
    bool a = tau - 1.0 / (2 * 2.0) < -(2.0 + 1) * tau;
    long double lg = logl(static_cast<long double>(c.l0));
    long double lhs = expl((-2.0L - 0.5L + 4.0L * tau) * lg) +
                      6.0L * (sqrtl(2.0L) + sqrtl(3.0L)) * expl((-0.5L + 4.0L * tau) * lg) +
                      1.0L / sqrtl(2.0L);
    bool b = lhs < 1.0L;
    bool cc = powl(static_cast<long double>(c.l0), 0.125L - 4.0L * tau) > 1.0L;
    return a && b && cc;
  };
  if (!tau_ok(c.tau0 * (1 - 1e-6))) return fail("tau inequalities fail below tau0");
  if (tau_ok(c.tau0 + std::max(eps, c.tau0 * 1e-6) * 10)) {
    return fail("tau inequalities still hold above tau0");
  }
  return pass("K=2, D_1=4, L0=" + std::to_string(c.l0) + ", tau0=" + std::to_string(c.tau0));
}

namespace {

// Degree-capped random blockade instance for trace-invariant runs: intra-A
// degrees stay below sqrt(D (1 + t^(1/4))) so each step's removal fits the
// |R_{u+1}| lower bound.
struct CappedInstance {
  Graph graph;
  Blockade blockade;
};

CappedInstance capped_instance(SplitMix64& rng) {
  int t = rng.next_below(2) ? 4 : 8;
  int w_blk = t == 4 ? 6 + rng.next_below(5) : 5 + rng.next_below(3);
  int na = t * w_blk;
  int n = 420 + rng.next_below(81);
  double dcap = double(n) / std::pow(double(t), 2.0);
  int cstar = static_cast<int>(std::floor(std::sqrt(dcap * (1.0 + std::pow(double(t), 0.25)))));
  cstar = std::max(1, cstar);

  std::vector<int> deg(n, 0);
  std::vector<std::pair<int, int>> edges;
  int attempts = 6 * na;
  for (int i = 0; i < attempts; ++i) {
    int u = rng.next_below(na);
    int v = rng.next_below(na);
    if (u == v) continue;
    if (deg[u] >= cstar - 1 || deg[v] >= cstar - 1) continue;
    int lo = std::min(u, v), hi = std::max(u, v);
    edges.emplace_back(lo, hi);
    ++deg[u];
    ++deg[v];
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Graph g(n, edges);
  std::vector<Bits> blocks;
  for (int b = 0; b < t; ++b) {
    Bits blk(n);
    for (int j = 0; j < w_blk; ++j) blk.set(b * w_blk + j);
    blocks.push_back(blk);
  }
  return {std::move(g), Blockade(n, blocks)};
}

}  // namespace

Outcome lemma_invariants_trial(std::uint64_t seed, int trial) {
  SplitMix64 rng = SplitMix64::for_instance(seed, trial);
  CappedInstance inst = capped_instance(rng);
  LemmaParams params;
  params.k = 3;
  params.d = 2.0;
  params.tau = 0.01;
  params.constants = compute_constants(params.k, params.d);
  RelaxFactors relax;
  relax.relaxed = true;
  ConstructionTrace trace =
      main_lemma_procedure(inst.graph, inst.blockade, params, relax);
  for (const auto& step : trace.steps) {
    for (const auto& check : step.checks) {
      if (check.name.rfind("r_next", 0) == 0 && !check.strict_ok) {
        return fail("step " + std::to_string(step.u) + " violates the |R_{u+1}| bound");
      }
    }
  }
  std::string kind;
  switch (trace.outcome.kind) {
    case LemmaOutcome::Kind::Comb: kind = "comb"; break;
    case LemmaOutcome::Kind::CaseI: kind = "case-i"; break;
    case LemmaOutcome::Kind::CaseII: kind = "case-ii"; break;
    case LemmaOutcome::Kind::BudgetExhausted: kind = "budget"; break;
  }
  if (trace.outcome.kind == LemmaOutcome::Kind::BudgetExhausted) {
    return fail("unexpected budget exhaustion: " + trace.outcome.note);
  }
  return pass("outcome " + kind + ", " + std::to_string(trace.steps.size()) + " steps");
}

Outcome lemma_planted_trial(std::uint64_t seed, int trial) {
  SplitMix64 rng = SplitMix64::for_instance(seed, trial);
  GeneratorSpec spec;
  spec.kind = GenKind::PlantedComb;
  spec.seed = rng.next();
  spec.teeth = 8 + rng.next_below(5);
  spec.tooth_size = 4 + rng.next_below(3);
  spec.noise = 0.0025;
  Generated gen = generate(spec);
  int n = gen.graph.size();
  int t = gen.blockade->length();

  LemmaParams params;
  params.k = 3;
  params.d = 2.0;
  params.tau = 0.01;
  params.constants = compute_constants(params.k, params.d);
  RelaxFactors relax;
  relax.relaxed = true;
  // Targets pinned to the planted dimensions: at least half a tooth of width
  // and 70% of the planted apexes.
  double width_goal = spec.tooth_size / 2.0;
  double len_goal = 0.7 * spec.teeth;
  relax.width = width_goal * std::pow(double(t), 2 * params.d + 2) / double(n);
  relax.len = len_goal / std::pow(double(t), 1.0 / 8.0);

  ConstructionTrace trace = main_lemma_procedure(gen.graph, *gen.blockade, params, relax);
  if (trace.outcome.kind != LemmaOutcome::Kind::Comb) {
    return fail("no comb (outcome " + std::to_string(int(trace.outcome.kind)) + ", note: " +
                trace.outcome.note + ")");
  }
  const Comb& comb = *trace.outcome.comb;
  if (!validate_comb(gen.graph, comb)) return fail("returned comb invalid");
  if (!guarded_ge(comb.length(), len_goal).ge) return fail("comb shorter than the target");
  if (!guarded_ge(comb.min_tooth(), width_goal).ge) return fail("comb narrower than the target");
  return pass("comb t=" + std::to_string(comb.length()) +
              " width=" + std::to_string(comb.min_tooth()));
}

namespace {

int verdict_class(const StrongVerdict& v) {
  switch (v.kind) {
    case StrongVerdict::Kind::Free: return 0;
    case StrongVerdict::Kind::ViolationInG: return 1;
    case StrongVerdict::Kind::ViolationInComplement: return 2;
  }
  return -1;
}

// Free/violating class matches under complementation. The reported side can
// be ViolationInG for both when graph and complement each violate, so only
// the binary class is symmetric.
bool symmetry_holds(const Graph& g, int k) {
  StrongVerdict a = is_strongly_k2_free(g, k);
  StrongVerdict b = is_strongly_k2_free(complement(g), k);
  return (verdict_class(a) == 0) == (verdict_class(b) == 0);
}

}  // namespace

Outcome strong_symmetry_exhaustive(int max_n, int k) {
  long total = 0;
  for (int n = std::max(2, k); n <= max_n; ++n) {
    std::uint32_t masks = 1u << (n * (n - 1) / 2);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      Graph g = CographClosure::graph_of_mask(n, mask);
      if (!symmetry_holds(g, k)) {
        return fail("asymmetry at n=" + std::to_string(n) + " mask=" + std::to_string(mask));
      }
      ++total;
    }
  }
  return pass(std::to_string(total) + " graphs symmetric");
}

Outcome strong_symmetry_sampled_trial(std::uint64_t seed, int trial, int n, int k) {
  SplitMix64 rng = SplitMix64::for_instance(seed, trial);
  GeneratorSpec spec;
  spec.kind = GenKind::Gnp;
  spec.n = n;
  spec.p = 0.2 + 0.6 * rng.next_double();
  spec.seed = rng.next();
  Graph g = generate(spec).graph;
  if (!symmetry_holds(g, k)) return fail("asymmetry on sampled graph");
  return pass("symmetric");
}

Outcome generator_validity_trial(std::uint64_t seed, int trial, const std::string& kind) {
  SplitMix64 rng = SplitMix64::for_instance(seed, trial);
  GeneratorSpec spec;
  spec.kind = gen_kind_from_string(kind);
  spec.seed = rng.next();
  switch (spec.kind) {
    case GenKind::Gnp:
      spec.n = 1 + rng.next_below(30);
      spec.p = rng.next_double();
      break;
    case GenKind::CographRandom:
      spec.leaves = 1 + rng.next_below(40);
      spec.join_bias = rng.next_double();
      break;
    case GenKind::PlantedComb:
      spec.teeth = 2 + rng.next_below(8);
      spec.tooth_size = 1 + rng.next_below(5);
      spec.noise = 0.01 * rng.next_double();
      break;
    case GenKind::RainbowFreeRejection:
      spec.k = 2 + rng.next_below(2);
      spec.blocks = spec.k + rng.next_below(4);
      spec.block_size = 1 + rng.next_below(3);
      spec.edge_prob = 0.05 + 0.2 * rng.next_double();
      break;
  }
  Generated gen = generate(spec);
  if (spec.kind == GenKind::CographRandom) {
    if (!is_cograph(gen.graph)) return fail("cograph-random output rejected by recognizer");
  }
  if (spec.kind == GenKind::RainbowFreeRejection) {
    if (is_rainbow_k2_free(gen.graph, *gen.blockade, spec.k)) {
      return fail("rainbow-free sample violates freeness");
    }
  }
  if (gen.blockade) {
    Bits all = gen.blockade->union_all();
    if (all.count() != gen.blockade->total_vertices()) return fail("overlapping blocks");
  }
  return pass("valid");
}

}  // namespace combgraph::verify
