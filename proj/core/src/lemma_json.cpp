#include "combgraph/lemma.hpp"
#include "json.hpp"

namespace combgraph {

namespace {

using nlohmann::json;

json check_to_json(const BoundCheck& c) {
  return json{{"name", c.name},
              {"measured", c.measured},
              {"strict_bound", c.strict_bound},
              {"strict_ok", c.strict_ok},
              {"relaxed_bound", c.relaxed_bound},
              {"relaxed_ok", c.relaxed_ok},
              {"direction", c.upper ? "upper" : "lower"}};
}

}  // namespace

std::string trace_to_json(const ConstructionTrace& trace) {
  json j;
  j["params"] = {{"k", trace.params.k},
                 {"d", trace.params.d},
                 {"tau", trace.params.tau},
                 {"K", trace.params.constants.k_sum},
                 {"L0", trace.params.constants.l0},
                 {"tau0", trace.params.constants.tau0},
                 {"c0", trace.params.constants.c0}};
  j["relax"] = {{"relaxed", trace.relax.relaxed},
                {"width", trace.relax.width},
                {"len", trace.relax.len},
                {"case_threshold", trace.relax.case_threshold},
                {"slack", trace.relax.slack}};
  j["t"] = trace.t;
  j["n"] = trace.n;
  j["u_star"] = trace.u_star;
  j["width_target"] = trace.width_target;
  j["len_target"] = trace.len_target;
  j["case_split"] = trace.case_split;

  j["steps"] = json::array();
  for (const auto& s : trace.steps) {
    json js{{"u", s.u},
            {"a", s.a},
            {"delta", s.delta},
            {"r_size", s.r_size},
            {"case", s.case_taken},
            {"removed_w", s.removed_w}};
    if (s.case_taken == 1) {
      js["ell"] = s.ell;
      js["layer_sizes"] = s.layer_sizes;
      js["i_sizes"] = s.i_sizes;
      js["i_total"] = s.i_total;
      js["comb_success"] = s.comb_success;
      js["s1_teeth_mass"] = s.s1_teeth_mass;
      js["s2_teeth_mass"] = s.s2_teeth_mass;
      js["kept_teeth_mass"] = s.kept_teeth_mass;
    }
    js["checks"] = json::array();
    for (const auto& c : s.checks) js["checks"].push_back(check_to_json(c));
    j["steps"].push_back(js);
  }

  j["checkpoint_checks"] = json::array();
  for (const auto& c : trace.checkpoint_checks) {
    j["checkpoint_checks"].push_back(check_to_json(c));
  }

  json jo;
  switch (trace.outcome.kind) {
    case LemmaOutcome::Kind::Comb: {
      jo["kind"] = "comb";
      jo["center"] = trace.outcome.comb_center;
      jo["block_indices"] = trace.outcome.comb_block_indices;
      json pairs = json::array();
      for (const auto& [apex, teeth] : trace.outcome.comb->pairs) {
        pairs.push_back({{"apex", apex}, {"teeth", teeth.to_vector()}});
      }
      jo["comb"] = {{"width_floor", trace.outcome.comb->width_floor}, {"pairs", pairs}};
      break;
    }
    case LemmaOutcome::Kind::CaseI: {
      jo["kind"] = "contradiction-case-i";
      const auto& c = *trace.outcome.case_i;
      json blocks = json::array();
      for (const auto& b : c.blocks) blocks.push_back(b.to_vector());
      jo["blocks"] = blocks;
      jo["block_floor"] = c.block_floor;
      jo["cograph_lower"] = c.cograph_lower;
      jo["g_tau"] = c.g_tau;
      jo["exceeds"] = c.exceeds;
      break;
    }
    case LemmaOutcome::Kind::CaseII: {
      jo["kind"] = "contradiction-case-ii";
      const auto& c = *trace.outcome.case_ii;
      jo["u_star"] = c.u_star;
      jo["u0"] = c.u0;
      jo["r_star_size"] = c.r_star_size;
      jo["union_e"] = c.union_e;
      jo["union_w"] = c.union_w;
      jo["apex_count"] = c.apex_count;
      jo["r_final"] = c.r_final;
      jo["r_final_edgeless"] = c.r_final_edgeless;
      jo["ratios"] = {{"e", c.ratio_e}, {"w", c.ratio_w}, {"a", c.ratio_a}, {"r", c.ratio_r}};
      jo["terms"] = {{"e", c.term_e},
                     {"w", c.term_w},
                     {"ar_raw", c.term_ar_raw},
                     {"ar_mid", c.term_ar_mid},
                     {"ar_final", c.term_ar_final},
                     {"sum", c.term_sum},
                     {"sum_below_one", c.sum_below_one}};
      break;
    }
    case LemmaOutcome::Kind::BudgetExhausted:
      jo["kind"] = "budget-exhausted";
      break;
  }
  jo["note"] = trace.outcome.note;
  j["outcome"] = jo;
  return j.dump(2);
}

}  // namespace combgraph
