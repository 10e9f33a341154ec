#include <algorithm>
#include <cmath>
#include <string>

#include "combgraph/errors.hpp"
#include "combgraph/lemma.hpp"
#include "combgraph/threshold.hpp"

namespace combgraph {

namespace {

Bits take_lowest_k(const Bits& src, int count) {
  Bits out(src.universe());
  int taken = 0;
  src.for_each([&](int v) {
    if (taken < count) {
      out.set(v);
      ++taken;
    }
  });
  return out;
}

BoundCheck upper_check(const std::string& name, double measured, double strict_bound,
                       double slack) {
  BoundCheck c;
  c.name = name;
  c.measured = measured;
  c.strict_bound = strict_bound;
  c.strict_ok = guarded_ge(strict_bound, measured).ge;
  c.relaxed_bound = strict_bound * slack;
  c.relaxed_ok = guarded_ge(c.relaxed_bound, measured).ge;
  c.upper = true;
  return c;
}

BoundCheck lower_check(const std::string& name, double measured, double strict_bound,
                       double slack) {
  BoundCheck c;
  c.name = name;
  c.measured = measured;
  c.strict_bound = strict_bound;
  c.strict_ok = guarded_ge(measured, strict_bound).ge;
  c.relaxed_bound = slack > 0 ? strict_bound / slack : strict_bound;
  c.relaxed_ok = guarded_ge(measured, c.relaxed_bound).ge;
  c.upper = false;
  return c;
}

struct Admitted {
  int apex = -1;
  int layer = 0;     // 1-based layer index alpha
  int block = -1;    // chosen block index
  Bits tooth;        // P set
};

struct ISelection {
  std::vector<Admitted> admitted;
  std::vector<int> i_sizes;       // |I_alpha| for alpha = 1..ell
  int s1_mass = 0;                // teeth mass over S1 rejections
  int s2_mass = 0;                // teeth mass over S2 rejections
  int kept_mass = 0;              // teeth mass over admitted apexes
};

// The admission walk over built layers, highest layer first, last apex of the
// top nonempty layer seeded, then each apex in reverse order subject to the
// half-coverage condition plus a fresh block of admissible size. The block of
// the current center is never used (keeps the teeth applicable to the
// rainbow-minor reduction).
ISelection select_teeth(const Graph& g, const Blockade& A, const CombLayers& layers,
                        int center_block, double seed_floor, double width_floor) {
  ISelection sel;
  int ell = static_cast<int>(layers.layers.size());
  sel.i_sizes.assign(ell, 0);
  std::vector<bool> used(A.length(), false);
  if (center_block >= 0) used[center_block] = true;
  Bits admitted_nbrs(g.size());  // union of N(x) over admitted apexes x
  bool any_processed = false;

  for (int alpha = ell; alpha >= 1; --alpha) {
    const Layer& layer = layers.layers[alpha - 1];
    int k = static_cast<int>(layer.apexes.size());
    for (int m = k - 1; m >= 0; --m) {
      const Bits& tooth = layer.teeth[m];
      int apex = layer.apexes[m];
      bool is_seed = !any_processed;  // last apex of the top nonempty layer
      any_processed = true;
      double fl = is_seed ? std::max(seed_floor, width_floor) : width_floor;
      bool half_ok = true;
      if (!is_seed) {
        int covered = (tooth & admitted_nbrs).count();
        half_ok = 2 * covered < tooth.count();
      }
      int chosen_block = -1;
      Bits chosen(g.size());
      if (half_ok) {
        for (int i = 0; i < A.length() && chosen_block < 0; ++i) {
          if (used[i]) continue;
          Bits cand = (A.block(i) & tooth) - admitted_nbrs;
          if (guarded_ge(cand.count(), fl).ge) {
            chosen_block = i;
            chosen = std::move(cand);
          }
        }
        if (is_seed && chosen_block < 0 && width_floor < fl) {
          // Degenerate seed (possible only under relaxation): fall back to the
          // conditional rule for it.
          for (int i = 0; i < A.length() && chosen_block < 0; ++i) {
            if (used[i]) continue;
            Bits cand = (A.block(i) & tooth) - admitted_nbrs;
            if (guarded_ge(cand.count(), width_floor).ge) {
              chosen_block = i;
              chosen = std::move(cand);
            }
          }
        }
      }
      if (chosen_block >= 0) {
        used[chosen_block] = true;
        admitted_nbrs |= g.neighbors(apex);
        sel.admitted.push_back({apex, alpha, chosen_block, std::move(chosen)});
        sel.i_sizes[alpha - 1] += 1;
        sel.kept_mass += tooth.count();
      } else if (!half_ok) {
        sel.s1_mass += tooth.count();
      } else {
        sel.s2_mass += tooth.count();
      }
    }
  }
  return sel;
}

}  // namespace

bool ConstructionTrace::all_strict_checks_pass() const {
  for (const auto& s : steps) {
    for (const auto& c : s.checks) {
      if (!c.strict_ok) return false;
    }
  }
  for (const auto& c : checkpoint_checks) {
    if (!c.strict_ok) return false;
  }
  return true;
}

ConstructionTrace main_lemma_procedure(const Graph& g, const Blockade& a_blockade,
                                       const LemmaParams& params_in,
                                       const RelaxFactors& relax) {
  LemmaParams params = params_in;
  if (params.constants.l0 == 0) params.constants = compute_constants(params.k, params.d);
  const int n = g.size();
  const int t = a_blockade.length();
  if (t < 1) throw PreconditionError("main_lemma_procedure: empty blockade");
  const double d = params.d;
  const double tau = params.tau;
  const double c0 = params.constants.c0;
  const double nd = static_cast<double>(n);
  const double td = static_cast<double>(t);
  const double cap_deg = nd / std::pow(td, d);           // |G|/t^d
  const double case_split = relax.case_threshold * nd / std::pow(td, 2 * d);
  const double width_target = relax.width * nd / std::pow(td, 2 * d + 2);
  const double len_target = relax.len * std::pow(td, 1.0 / 8.0);
  const double t14 = std::pow(td, 0.25);
  const double t18 = std::pow(td, 1.0 / 8.0);

  ConstructionTrace trace;
  trace.params = params;
  trace.relax = relax;
  trace.t = t;
  trace.n = n;
  trace.width_target = width_target;
  trace.len_target = len_target;
  trace.case_split = case_split;
  trace.u_star = std::max(1, static_cast<int>(std::ceil(len_target - 1e-9)));

  if (!relax.relaxed) {
    std::vector<std::string> failures;
    if (!is_equicardinal(a_blockade)) failures.push_back("blockade not equicardinal");
    if (a_blockade.length() > 0) {
      auto w = guarded_ge(a_blockade.width(), cap_deg);
      auto w2 = guarded_ge(cap_deg, a_blockade.width());
      if (!(w.ge && w2.ge)) failures.push_back("width != |G|/t^d");
    }
    if (params.tau >= params.constants.tau0) failures.push_back("tau >= tau0");
    if (t < params.constants.l0) failures.push_back("t < L0");
    if (static_cast<double>(t) > 2.0 * std::pow(nd, 1.0 / d) + 1e-9) {
      failures.push_back("t > 2|G|^(1/d)");
    }
    Bits all = a_blockade.union_all();
    bool deg_ok = true;
    all.for_each([&](int a) {
      if (!((g.neighbors(a) & all).count() < cap_deg)) deg_ok = false;
    });
    if (!deg_ok) failures.push_back("some a in A has |E(a,A)| >= |G|/t^d");
    try {
      if (compute_w_g(g) * std::pow(td, 2 * d) < nd) {
        failures.push_back("|G|/t^(2d) > W_G");
      }
    } catch (const SizeCapError&) {
      failures.push_back("W_G unverifiable at this size");
    }
    try {
      if (is_strongly_k2_free(g, params.k).kind != StrongVerdict::Kind::Free) {
        failures.push_back("G is not strongly (k choose 2)-free");
      }
    } catch (const SizeCapError&) {
      failures.push_back("strong freeness unverifiable at this size");
    }
    try {
      if (is_tau_critical(g, tau).kind != TauVerdict::Kind::Critical) {
        failures.push_back("G is not tau-critical");
      }
    } catch (const SizeCapError&) {
      failures.push_back("tau-criticality unverifiable at this size");
    }
    if (!failures.empty()) {
      std::string msg = "main_lemma_procedure: strict mode refuses:";
      for (const auto& f : failures) msg += " [" + f + "]";
      throw PreconditionError(msg);
    }
  }

  const double removal_allowance = cap_deg + 1.0 + cap_deg * t14;
  const long max_total_steps = 200000;
  long total_steps = 0;

  Bits r = a_blockade.union_all();
  std::vector<Bits> e_history;

  auto record_common = [&](StepRecord& rec, const Bits& r_now, int a, int delta) {
    rec.a = a;
    rec.delta = delta;
    rec.r_size = r_now.count();
  };

  auto do_removal = [&](StepRecord& rec, const Bits& r_now, int a) {
    Bits c = g.neighbors(a) & r_now;
    Bits dside = r_now - c;
    dside.reset(a);
    Bits w(g.size());
    c.for_each([&](int x) { w |= g.neighbors(x) & dside; });
    Bits r_next = dside - w;
    rec.removed_w = w.count();
    rec.checks.push_back(lower_check("r_next >= r - (|G|/t^d + 1 + (|G|/t^d) t^(1/4))",
                                     r_next.count(), r_now.count() - removal_allowance,
                                     relax.slack));
    e_history.push_back(c);
    return r_next;
  };

  int u = 0;
  std::optional<LemmaOutcome> outcome;

  while (true) {
    if (++total_steps > max_total_steps) {
      outcome = LemmaOutcome{};
      outcome->kind = LemmaOutcome::Kind::BudgetExhausted;
      outcome->note = "global work limit reached at step " + std::to_string(u);
      break;
    }
    if (r.empty()) {
      outcome = LemmaOutcome{};
      outcome->kind = LemmaOutcome::Kind::BudgetExhausted;
      outcome->note = "residual exhausted at step " + std::to_string(u) +
                      (u <= trace.u_star ? " before the checkpoint" : "");
      break;
    }
    MaxDegree md = max_degree_in(g, r);
    const int a_u = md.vertex;
    const int delta_u = md.degree;

    if (u == trace.u_star) {
      // |R_{u*}| chain: measured against the exact, the 2t^(1/8) and the
      // t^(1/2) forms of the lower bound.
      double exact_form =
          cap_deg * (td - trace.u_star * (1.0 + std::pow(td, d) / nd + t14));
      double mid_form = cap_deg * (td - 2.0 * t18 * (1.0 + std::pow(2.0, d) + t14));
      double final_form = cap_deg * std::sqrt(td);
      trace.checkpoint_checks.push_back(
          lower_check("|R_u*| >= (|G|/t^d)(t - u*(1 + t^d/|G| + t^(1/4)))", r.count(),
                      exact_form, relax.slack));
      trace.checkpoint_checks.push_back(lower_check(
          "|R_u*| >= (|G|/t^d)(t - 2t^(1/8)(1 + 2^d + t^(1/4)))", r.count(), mid_form,
          relax.slack));
      trace.checkpoint_checks.push_back(lower_check("|R_u*| >= (|G|/t^d) t^(1/2)", r.count(),
                                                    final_form, relax.slack));

      if (guarded_ge(delta_u, case_split).ge) {
        // Anticomplete blocks E(a_v, R_v), v = 1..u*, certify a large cograph.
        CaseICertificate cert;
        Bits c_now = g.neighbors(a_u) & r;
        for (int v = 1; v < u && v < static_cast<int>(e_history.size()); ++v) {
          cert.blocks.push_back(e_history[v]);
        }
        cert.blocks.push_back(c_now);
        e_history.push_back(c_now);
        for (size_t i = 0; i < cert.blocks.size(); ++i) {
          for (size_t j = i + 1; j < cert.blocks.size(); ++j) {
            if (is_pure_pair(g, cert.blocks[i], cert.blocks[j]) != Purity::Anticomplete) {
              throw Error("main_lemma_procedure: case (i) blocks are not anticomplete");
            }
          }
        }
        cert.block_floor = nd / std::pow(td, 2 * d);
        cert.g_tau = std::pow(nd, tau);
        cert.cograph_lower =
            std::pow(cert.block_floor, tau) * static_cast<double>(trace.u_star);
        cert.exceeds = cert.cograph_lower > cert.g_tau;
        StepRecord rec;
        rec.u = u;
        record_common(rec, r, a_u, delta_u);
        rec.case_taken = 1;
        trace.steps.push_back(rec);
        outcome = LemmaOutcome{};
        outcome->kind = LemmaOutcome::Kind::CaseI;
        outcome->case_i = std::move(cert);
        break;
      }

      // Case (ii): run the construction down to an edgeless residual.
      CaseIICertificate cert;
      cert.u_star = trace.u_star;
      cert.r_star_size = r.count();
      Bits r_cur = r;
      int uu = u;
      int cur_a = a_u;
      int cur_delta = delta_u;
      bool aborted = false;
      while (!r_cur.empty() && cur_delta > 0) {
        if (++total_steps > max_total_steps) {
          aborted = true;
          break;
        }
        StepRecord rec;
        rec.u = uu;
        record_common(rec, r_cur, cur_a, cur_delta);
        rec.case_taken = 2;
        double w_sharp = c0 * std::sqrt(nd * cur_delta);
        Bits r_next = do_removal(rec, r_cur, cur_a);
        rec.checks.push_back(
            upper_check("|W_u| <= c0 sqrt(|G| delta_u)", rec.removed_w, w_sharp, relax.slack));
        rec.checks.push_back(upper_check("|W_u| <= c0 |G|/t^d", rec.removed_w,
                                         c0 * cap_deg, relax.slack));
        trace.steps.push_back(rec);
        cert.union_e += cur_delta;
        cert.union_w += rec.removed_w;
        cert.apex_count += 1;
        cert.u0 = uu;
        r_cur = r_next;
        ++uu;
        if (!r_cur.empty()) {
          MaxDegree nxt = max_degree_in(g, r_cur);
          cur_a = nxt.vertex;
          cur_delta = nxt.degree;
        } else {
          cur_delta = 0;
        }
      }
      if (aborted) {
        outcome = LemmaOutcome{};
        outcome->kind = LemmaOutcome::Kind::BudgetExhausted;
        outcome->note = "global work limit reached in the case (ii) continuation";
        break;
      }
      cert.r_final = r_cur.count();
      cert.r_final_edgeless = true;
      r_cur.for_each([&](int x) {
        if ((g.neighbors(x) & r_cur).count() > 0) cert.r_final_edgeless = false;
      });
      if (cert.union_e + cert.union_w + cert.apex_count + cert.r_final != cert.r_star_size) {
        throw Error("main_lemma_procedure: case (ii) decomposition does not partition R_u*");
      }
      double rs = static_cast<double>(cert.r_star_size);
      cert.ratio_e = cert.union_e / rs;
      cert.ratio_w = cert.union_w / rs;
      cert.ratio_a = cert.apex_count / rs;
      cert.ratio_r = cert.r_final / rs;
      cert.term_e = std::pow(td, -d - 0.5 + 2 * d * tau);
      cert.term_w = c0 * std::pow(td, -0.5 + 2 * d * tau);
      cert.term_ar_raw = 2.0 * std::pow(nd, tau - 1.0) * std::pow(td, d - 0.5);
      cert.term_ar_mid = std::pow(2.0, d + 0.5) * std::pow(nd, tau - 1.0 / (2 * d));
      cert.term_ar_final = std::pow(2.0, d + 0.5) * std::pow(nd, -(d + 1.0) * tau);
      cert.term_sum = cert.term_e + cert.term_w + cert.term_ar_final;
      cert.sum_below_one = cert.term_sum < 1.0;
      outcome = LemmaOutcome{};
      outcome->kind = LemmaOutcome::Kind::CaseII;
      outcome->case_ii = std::move(cert);
      break;
    }

    // Regular step before the checkpoint.
    StepRecord rec;
    rec.u = u;
    record_common(rec, r, a_u, delta_u);

    if (guarded_ge(delta_u, case_split).ge) {
      rec.case_taken = 1;
      Bits c = g.neighbors(a_u) & r;
      Bits dside = r - c;
      dside.reset(a_u);
      rec.ell = largest_ratio23_exponent(delta_u, case_split);
      LayerPolicy policy;
      policy.stop_at_empty_layer = false;
      policy.max_layers = rec.ell;
      CombLayers layers = build_layers(g, c, dside, delta_u, policy);
      for (const auto& layer : layers.layers) {
        rec.layer_sizes.push_back(static_cast<int>(layer.apexes.size()));
      }
      double seed_floor = (2.0 / 3.0) * case_split / td;
      ISelection sel = select_teeth(g, a_blockade, layers, a_blockade.block_of(a_u),
                                    seed_floor, width_target);
      rec.i_sizes = sel.i_sizes;
      rec.i_total = static_cast<int>(sel.admitted.size());
      rec.s1_teeth_mass = sel.s1_mass;
      rec.s2_teeth_mass = sel.s2_mass;
      rec.kept_teeth_mass = sel.kept_mass;
      rec.comb_success = guarded_ge(rec.i_total, len_target).ge;

      if (rec.comb_success) {
        std::sort(sel.admitted.begin(), sel.admitted.end(),
                  [](const Admitted& x, const Admitted& y) { return x.block < y.block; });
        int w_min = sel.admitted[0].tooth.count();
        for (const auto& adm : sel.admitted) w_min = std::min(w_min, adm.tooth.count());
        Comb comb;
        comb.width_floor = width_target;
        std::vector<Bits> teeth;
        LemmaOutcome out;
        for (const auto& adm : sel.admitted) {
          Bits tooth = take_lowest_k(adm.tooth, w_min);
          comb.pairs.emplace_back(adm.apex, tooth);
          teeth.push_back(tooth);
          out.comb_block_indices.push_back(adm.block);
        }
        Bits all = a_blockade.union_all();
        Bits e_side = g.neighbors(a_u) & all;
        Bits not_e = all - g.neighbors(a_u);
        not_e.reset(a_u);
        if (!validate_comb_in(g, comb, e_side, not_e)) {
          throw Error("main_lemma_procedure: constructed comb fails validation");
        }
        Blockade minor(g.size(), teeth);
        if (!is_minor_of(minor, a_blockade) || !is_equicardinal(minor)) {
          throw Error("main_lemma_procedure: comb teeth are not an equicardinal minor");
        }
        rec.checks.push_back(lower_check("comb width >= |G|/t^(2d+2)", w_min, width_target,
                                         relax.slack));
        rec.checks.push_back(
            lower_check("comb length >= t^(1/8)", rec.i_total, len_target, relax.slack));
        trace.steps.push_back(rec);
        out.kind = LemmaOutcome::Kind::Comb;
        out.comb = std::move(comb);
        out.comb_center = a_u;
        outcome = std::move(out);
        break;
      }

      // Rejection path: bound the teeth mass and the removed set.
      double s1_bound = 0;
      for (int alpha = 1; alpha <= rec.ell; ++alpha) {
        int suffix = 0;
        for (int b = alpha; b <= rec.ell; ++b) {
          if (b - 1 < static_cast<int>(rec.i_sizes.size())) suffix += rec.i_sizes[b - 1];
        }
        s1_bound += 3.0 * std::pow(2.0 / 3.0, alpha - 1) * delta_u * suffix;
      }
      rec.checks.push_back(upper_check("S1 teeth mass", rec.s1_teeth_mass, s1_bound,
                                       relax.slack));
      double q2_strict = nd / std::pow(td, 2 * d + 2);
      double s2_bound = 2.0 * (q2_strict * td * 1.5 * std::pow(td, d + 1.0) +
                               cap_deg * rec.i_total);
      rec.checks.push_back(upper_check("S2 teeth mass", rec.s2_teeth_mass, s2_bound,
                                       relax.slack));
      double w_formula = cap_deg * (12.0 * t18 + 3.0 + c0);
      Bits r_next = do_removal(rec, r, a_u);
      rec.checks.push_back(upper_check("|W_u| <= (|G|/t^d)(12 t^(1/8) + 3 + c0)",
                                       rec.removed_w, w_formula, relax.slack));
      rec.checks.push_back(upper_check("|W_u| <= (|G|/t^d) t^(1/4)", rec.removed_w,
                                       cap_deg * t14, relax.slack));
      trace.steps.push_back(rec);
      r = r_next;
    } else {
      rec.case_taken = 2;
      double w_sharp = c0 * std::sqrt(nd * delta_u);
      Bits r_next = do_removal(rec, r, a_u);
      rec.checks.push_back(
          upper_check("|W_u| <= c0 sqrt(|G| delta_u)", rec.removed_w, w_sharp, relax.slack));
      rec.checks.push_back(
          upper_check("|W_u| <= c0 |G|/t^d", rec.removed_w, c0 * cap_deg, relax.slack));
      trace.steps.push_back(rec);
      r = r_next;
    }
    ++u;
  }

  trace.outcome = std::move(*outcome);

  // Construction-wide sanity: the removed neighbourhoods are pairwise
  // anticomplete by the choice of R_{u+1}.
  for (size_t i = 0; i < e_history.size(); ++i) {
    for (size_t j = i + 1; j < e_history.size(); ++j) {
      if (e_history[i].empty() || e_history[j].empty()) continue;
      if (is_pure_pair(g, e_history[i], e_history[j]) != Purity::Anticomplete) {
        throw Error("main_lemma_procedure: E(a_u, R_u) blocks are not pairwise anticomplete");
      }
    }
  }
  return trace;
}

}  // namespace combgraph
