#ifndef COMBGRAPH_LEMMA_HPP
#define COMBGRAPH_LEMMA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "combgraph/blockade.hpp"
#include "combgraph/cograph.hpp"
#include "combgraph/comb.hpp"
#include "combgraph/graph.hpp"
#include "combgraph/k2.hpp"

namespace combgraph {

// K = sum_{a>=1} (2/3)^a = 2 exactly. c0 = 3^(3/2)/(3/2 - sqrt(3/2)), which
// simplifies to 6(sqrt2 + sqrt3). l0 is the smallest integer from which both
// length inequalities hold for good; tau0 the supremum admissible exponent.
struct LemmaConstants {
  double k_sum = 2.0;
  double c0 = 0;
  std::int64_t l0 = 0;
  double tau0 = 0;
  double tau_root_a = 0;  // 1/(2d(d+2))
  double tau_root_b = 0;  // bisection root of the l0-based inequality
  double tau_root_c = 0;  // 1/(16d)
};

LemmaConstants compute_constants(int k, double d);

// Exact 2^(s-1) * 4^(2s-1) = 2^(5s-3). Throws std::overflow_error beyond
// 64 bits; the exponent/decimal forms are exact for any s.
std::uint64_t d_s(int s);
int d_s_exponent(int s);
std::string d_s_decimal(int s);

struct BaseDims {
  int s = 0;
  std::uint64_t length = 0;    // 2^s, >= t^(1/10)
  std::uint64_t divisor = 0;   // D_s, <= t
};
BaseDims base_remark_dimensions(std::uint64_t t);

struct PureBlockadeResult {
  Blockade blockade;
  Cotree pattern_tree;  // cotree of the (edgeless) pattern on block indices
};

// Halving recursion on a rainbow (2 choose 2)-free blockade of length >= D_s
// and width W: returns a pure blockade of length 2^s and width >= W/D_s whose
// pattern is a cograph. Errors carry a concrete counterexample when the input
// is not rainbow-free.
PureBlockadeResult pure_blockade_from_rainbow22(const Graph& g, const Blockade& b, int s,
                                                const K2Options& opts = {});

// Teeth of a comb hanging off a vertex of a rainbow (k choose 2)-free
// blockade form a rainbow (k-1 choose 2)-free blockade. Preconditions are
// enforced (and named on failure); the conclusion is asserted by the
// exhaustive oracle when k >= 3.
Blockade comb_to_rainbow_minor(const Graph& g, const Blockade& a_blockade, int k, int a,
                               const Comb& comb, const K2Options& opts = {});

struct RelaxFactors {
  bool relaxed = false;       // relaxed mode never refuses preconditions
  double width = 1.0;         // scales the |G|/t^(2d+2) tooth target
  double len = 1.0;           // scales the t^(1/8) length target
  double case_threshold = 1.0;  // scales the |G|/t^(2d) case split
  double slack = 1.0;         // scales recorded upper bounds (lower bounds divided)
};

struct LemmaParams {
  int k = 2;
  double d = 2.0;
  double tau = 0.01;
  LemmaConstants constants;
};

struct BoundCheck {
  std::string name;
  double measured = 0;
  double strict_bound = 0;
  bool strict_ok = false;
  double relaxed_bound = 0;
  bool relaxed_ok = false;
  bool upper = true;  // measured <= bound (false: measured >= bound)
};

struct StepRecord {
  int u = 0;
  int a = -1;
  int delta = 0;
  int r_size = 0;
  int case_taken = 0;  // 1 or 2
  int ell = 0;                       // case 1: deepest layer considered
  std::vector<int> layer_sizes;      // case 1: k_s per layer (up to ell)
  std::vector<int> i_sizes;          // case 1: |I_alpha| per layer
  int i_total = 0;
  bool comb_success = false;
  int removed_w = 0;                 // |W_u|
  int s1_teeth_mass = 0;             // case 1 bookkeeping: teeth mass over S1
  int s2_teeth_mass = 0;             //                    teeth mass over S2
  int kept_teeth_mass = 0;           //                    teeth mass over admitted apexes
  std::vector<BoundCheck> checks;
};

struct CaseICertificate {
  std::vector<Bits> blocks;  // E(a_u, R_u), u = 1..u_star, pairwise anticomplete
  double block_floor = 0;    // |G|/t^(2d)
  double cograph_lower = 0;  // (|G|/t^(2d))^tau * u_star
  double g_tau = 0;          // |G|^tau
  bool exceeds = false;      // cograph_lower > g_tau
};

struct CaseIICertificate {
  int u_star = 0;
  int u0 = -1;  // largest u with delta_u > 0, -1 when none
  int r_star_size = 0;
  std::int64_t union_e = 0;
  std::int64_t union_w = 0;
  std::int64_t apex_count = 0;
  std::int64_t r_final = 0;
  bool r_final_edgeless = false;
  // measured ratios against |R_{u_star}| followed by the closed-form terms
  double ratio_e = 0, ratio_w = 0, ratio_a = 0, ratio_r = 0;
  double term_e = 0;       // t^(-d-1/2+2d tau)
  double term_w = 0;       // c0 * t^(-1/2+2d tau)
  double term_ar_raw = 0;  // 2 |G|^(tau-1) t^(d-1/2)
  double term_ar_mid = 0;  // 2^(d+1/2) |G|^(tau-1/(2d))
  double term_ar_final = 0;  // 2^(d+1/2) |G|^(-(d+1) tau)
  double term_sum = 0;     // term_e + term_w + term_ar_final
  bool sum_below_one = false;
};

struct LemmaOutcome {
  enum class Kind { Comb, CaseI, CaseII, BudgetExhausted };
  Kind kind = Kind::BudgetExhausted;
  std::string note;
  std::optional<Comb> comb;      // outcome (a), teeth equicardinal
  int comb_center = -1;          // the vertex b the comb hangs off
  std::vector<int> comb_block_indices;  // block hosting each tooth
  std::optional<CaseICertificate> case_i;
  std::optional<CaseIICertificate> case_ii;
};

struct ConstructionTrace {
  LemmaParams params;
  RelaxFactors relax;
  int t = 0;
  int n = 0;
  int u_star = 0;
  double width_target = 0;   // relax.width * |G|/t^(2d+2)
  double len_target = 0;     // relax.len * t^(1/8)
  double case_split = 0;     // relax.case_threshold * |G|/t^(2d)
  std::vector<StepRecord> steps;
  std::vector<BoundCheck> checkpoint_checks;  // |R_{u_star}| chain
  LemmaOutcome outcome;

  bool all_strict_checks_pass() const;
};

std::string trace_to_json(const ConstructionTrace& trace);

// Iterative comb-extraction procedure over an equicardinal blockade. Strict
// mode verifies every stated precondition (refusing with the full list of
// failures or of checks that exceed oracle caps); relaxed mode records
// verdicts but never refuses.
ConstructionTrace main_lemma_procedure(const Graph& g, const Blockade& a_blockade,
                                       const LemmaParams& params,
                                       const RelaxFactors& relax = {});

}  // namespace combgraph

#endif
