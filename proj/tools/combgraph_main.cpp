// Command-line front end: generators, freeness oracles, comb construction,
// cograph tools, the lemma procedure and suite orchestration.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "combgraph/cograph.hpp"
#include "combgraph/comb.hpp"
#include "combgraph/errors.hpp"
#include "combgraph/generators.hpp"
#include "combgraph/io.hpp"
#include "combgraph/k2.hpp"
#include "combgraph/lemma.hpp"
#include "combgraph/suite.hpp"
#include "json.hpp"

namespace {

using combgraph::Bits;
using combgraph::Blockade;
using combgraph::Comb;
using combgraph::Graph;
using nlohmann::json;

Bits parse_vertex_list(const std::string& csv, int n, const char* what) {
  Bits out(n);
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int v = std::stoi(item);
    if (v < 0 || v >= n) {
      throw combgraph::Error(std::string(what) + ": vertex out of range: " + item);
    }
    out.set(v);
  }
  return out;
}

void write_or_print(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << "\n";
  } else {
    combgraph::write_file(path, text + "\n");
  }
}

json comb_to_json(const Comb& comb) {
  json pairs = json::array();
  for (const auto& [apex, teeth] : comb.pairs) {
    pairs.push_back({{"apex", apex}, {"teeth", teeth.to_vector()}});
  }
  return json{{"kind", "comb"},
              {"t", comb.length()},
              {"width_floor", comb.width_floor},
              {"min_tooth", comb.min_tooth()},
              {"pairs", pairs}};
}

json witnesses_to_json(const combgraph::WitnessMap& map) {
  json out = json::array();
  for (const auto& [pair, w] : map.witnesses) {
    out.push_back({{"i", pair.first}, {"j", pair.second}, {"witness", w}});
  }
  return out;
}

combgraph::RelaxFactors parse_relax(const std::string& text) {
  combgraph::RelaxFactors relax;
  relax.relaxed = true;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw combgraph::Error("bad --relax entry: " + item);
    std::string key = item.substr(0, eq);
    double value = std::stod(item.substr(eq + 1));
    if (key == "width") {
      relax.width = value;
    } else if (key == "len") {
      relax.len = value;
    } else if (key == "case") {
      relax.case_threshold = value;
    } else if (key == "slack") {
      relax.slack = value;
    } else {
      throw combgraph::Error("bad --relax key: " + key);
    }
  }
  return relax;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial structure toolbox: blockades, combs, cographs"};
  app.require_subcommand(1);

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate graphs/blockades deterministically");
  std::string gen_kind = "gnp";
  combgraph::GeneratorSpec spec;
  std::string gen_out, gen_blockade_out;
  gen->add_option("--kind", gen_kind,
                  "gnp | cograph-random | planted-comb | rainbow-free-rejection");
  gen->add_option("--seed", spec.seed, "64-bit seed");
  gen->add_option("--n", spec.n, "gnp vertex count");
  gen->add_option("--p", spec.p, "gnp edge probability");
  gen->add_option("--leaves", spec.leaves, "cograph-random leaf count");
  gen->add_option("--join-bias", spec.join_bias, "cograph-random join probability");
  gen->add_option("--teeth", spec.teeth, "planted-comb apex count");
  gen->add_option("--tooth-size", spec.tooth_size, "planted-comb tooth size");
  gen->add_option("--noise", spec.noise, "planted-comb noise edge probability");
  gen->add_option("--k", spec.k, "rainbow-free-rejection freeness parameter");
  gen->add_option("--blocks", spec.blocks, "rainbow-free-rejection block count");
  gen->add_option("--block-size", spec.block_size, "rainbow-free-rejection block size");
  gen->add_option("--max-attempts", spec.max_attempts, "rejection attempt cap");
  gen->add_option("--edge-prob", spec.edge_prob, "proposal edge probability");
  gen->add_option("--out", gen_out, "graph output path (stdout when omitted)");
  gen->add_option("--blockade-out", gen_blockade_out, "blockade output path");
  gen->callback([&] {
    spec.kind = combgraph::gen_kind_from_string(gen_kind);
    combgraph::Generated res = combgraph::generate(spec);
    write_or_print(combgraph::graph_to_json(res.graph), gen_out);
    if (!gen_blockade_out.empty()) {
      if (!res.blockade) throw combgraph::Error("generator emits no blockade");
      combgraph::save_blockade(*res.blockade, gen_blockade_out);
    }
  });

  // ---- cograph ------------------------------------------------------------
  auto* cog = app.add_subcommand("cograph", "recognition and largest induced cograph");
  auto* cog_check = cog->add_subcommand("check", "print the cotree or NOT COGRAPH");
  std::string cog_path, cog_format = "text";
  cog_check->add_option("graph", cog_path, "graph json path")->required();
  cog_check->add_option("--format", cog_format, "text | json");
  cog_check->callback([&] {
    Graph g = combgraph::load_graph(cog_path);
    auto tree = combgraph::is_cograph(g);
    if (cog_format == "json") {
      json out{{"cograph", tree.has_value()}};
      if (tree) out["cotree"] = tree->to_string();
      std::cout << out.dump() << "\n";
    } else if (tree) {
      std::cout << tree->to_string() << "\n";
    } else {
      std::cout << "NOT COGRAPH\n";
    }
  });
  auto* cog_largest = cog->add_subcommand("largest", "maximum induced cograph");
  std::string cogl_path;
  int cog_limit = 24;
  cog_largest->add_option("graph", cogl_path, "graph json path")->required();
  cog_largest->add_option("--limit", cog_limit, "search size cap");
  cog_largest->callback([&] {
    Graph g = combgraph::load_graph(cogl_path);
    combgraph::CographLimits limits;
    limits.largest_max_n = cog_limit;
    Bits best = combgraph::largest_cograph(g, limits);
    json out{{"size", best.count()}, {"vertices", best.to_vector()}};
    std::cout << out.dump() << "\n";
  });

  // ---- k2 -----------------------------------------------------------------
  auto* k2 = app.add_subcommand("k2", "(k choose 2)-freeness oracles");
  auto* k2_check = k2->add_subcommand("check", "free / violation verdict with witnesses");
  std::string k2_graph, k2_blockade;
  int k2_k = 2;
  bool k2_strong = false, k2_strict = false;
  k2_check->add_option("--graph", k2_graph, "graph json path")->required();
  k2_check->add_option("--k", k2_k, "tuple length");
  k2_check->add_option("--blockade", k2_blockade, "blockade json path (rainbow check)");
  k2_check->add_flag("--strong", k2_strong, "check the graph and its complement");
  k2_check->add_flag("--strict-distinct", k2_strict, "require pairwise distinct witnesses");
  k2_check->callback([&] {
    Graph g = combgraph::load_graph(k2_graph);
    combgraph::K2Options opts;
    opts.strict_distinct = k2_strict;
    json out;
    if (!k2_blockade.empty()) {
      Blockade b = combgraph::load_blockade(k2_blockade, g.size());
      auto v = combgraph::is_rainbow_k2_free(g, b, k2_k, opts);
      out["mode"] = "rainbow";
      out["free"] = !v.has_value();
      if (v) {
        out["tuple"] = v->tuple;
        out["witnesses"] = witnesses_to_json(v->witnesses);
      }
    } else if (k2_strong) {
      auto v = combgraph::is_strongly_k2_free(g, k2_k, opts);
      out["mode"] = "strong";
      switch (v.kind) {
        case combgraph::StrongVerdict::Kind::Free: out["verdict"] = "free"; break;
        case combgraph::StrongVerdict::Kind::ViolationInG:
          out["verdict"] = "violation-in-graph";
          break;
        case combgraph::StrongVerdict::Kind::ViolationInComplement:
          out["verdict"] = "violation-in-complement";
          break;
      }
      if (v.kind != combgraph::StrongVerdict::Kind::Free) {
        out["tuple"] = v.tuple;
        out["witnesses"] = witnesses_to_json(v.witnesses);
      }
    } else {
      auto v = combgraph::is_strongly_k2_free(g, k2_k, opts);
      out["mode"] = "graph";
      bool violated = v.kind == combgraph::StrongVerdict::Kind::ViolationInG;
      out["free"] = !violated;
      if (violated) {
        out["tuple"] = v.tuple;
        out["witnesses"] = witnesses_to_json(v.witnesses);
      }
    }
    std::cout << out.dump() << "\n";
  });

  // ---- comb ---------------------------------------------------------------
  auto* comb = app.add_subcommand("comb", "comb construction and the W_G quantity");
  auto* comb_build = comb->add_subcommand("build", "comb-or-bound dichotomy on (A, B)");
  std::string cb_graph, cb_a, cb_b, cb_out;
  double cb_gamma = 1.0, cb_d = 0.5;
  comb_build->add_option("--graph", cb_graph, "graph json path")->required();
  comb_build->add_option("--A", cb_a, "comma-separated apex-side vertices")->required();
  comb_build->add_option("--B", cb_b, "comma-separated teeth-side vertices")->required();
  comb_build->add_option("--gamma", cb_gamma, "width scale");
  comb_build->add_option("--d", cb_d, "exponent in (0,1)");
  comb_build->add_option("--out", cb_out, "output path (stdout when omitted)");
  comb_build->callback([&] {
    Graph g = combgraph::load_graph(cb_graph);
    Bits a_side = parse_vertex_list(cb_a, g.size(), "--A");
    Bits b_side = parse_vertex_list(cb_b, g.size(), "--B");
    auto res = combgraph::comb_or_bound(g, a_side, b_side, cb_gamma, cb_d);
    json out;
    if (res.comb) {
      out = comb_to_json(*res.comb);
    } else {
      out = json{{"kind", "bound"},
                 {"b_size", res.bound->b_size},
                 {"delta", res.bound->delta},
                 {"gamma", res.bound->gamma},
                 {"d", res.bound->d},
                 {"bound", res.bound->bound}};
    }
    write_or_print(out.dump(), cb_out);
  });
  auto* comb_wg = comb->add_subcommand("wg", "minimal equicardinal comb width");
  std::string wg_graph;
  int wg_cap = 12;
  comb_wg->add_option("--graph", wg_graph, "graph json path")->required();
  comb_wg->add_option("--cap", wg_cap, "exhaustive cap on n");
  comb_wg->callback([&] {
    Graph g = combgraph::load_graph(wg_graph);
    combgraph::WgLimits limits;
    limits.max_n = wg_cap;
    json out{{"n", g.size()}, {"w_g", combgraph::compute_w_g(g, limits)}};
    std::cout << out.dump() << "\n";
  });

  // ---- lemma --------------------------------------------------------------
  auto* lemma = app.add_subcommand("lemma", "iterative comb-extraction procedure");
  auto* lemma_constants = lemma->add_subcommand("constants", "K, L0, tau0 and the D_s table");
  int lc_k = 2;
  double lc_d = 2.0;
  int lc_table = 5;
  lemma_constants->add_option("--k", lc_k, "tuple parameter (k >= 2)");
  lemma_constants->add_option("--d", lc_d, "exponent (d >= 2)");
  lemma_constants->add_option("--ds-table", lc_table, "how many D_s rows to print");
  lemma_constants->callback([&] {
    combgraph::LemmaConstants c = combgraph::compute_constants(lc_k, lc_d);
    json ds = json::array();
    for (int s = 1; s <= lc_table; ++s) {
      ds.push_back({{"s", s}, {"D_s", combgraph::d_s_decimal(s)}});
    }
    json out{{"K", c.k_sum}, {"L0", c.l0},  {"tau0", c.tau0},
             {"c0", c.c0},   {"Ds", ds},    {"tau_roots", {c.tau_root_a, c.tau_root_b, c.tau_root_c}}};
    std::cout << out.dump(2) << "\n";
  });
  auto* lemma_run = lemma->add_subcommand("run", "run the procedure, emit the trace");
  std::string lr_graph, lr_blockade, lr_relax, lr_out;
  int lr_k = 3;
  double lr_d = 2.0, lr_tau = 0.01;
  bool lr_strict = false;
  lemma_run->add_option("--graph", lr_graph, "graph json path")->required();
  lemma_run->add_option("--blockade", lr_blockade, "blockade json path")->required();
  lemma_run->add_option("--k", lr_k, "freeness parameter");
  lemma_run->add_option("--d", lr_d, "sparsity exponent (d >= 2)");
  lemma_run->add_option("--tau", lr_tau, "criticality exponent");
  lemma_run->add_option("--relax", lr_relax,
                        "comma list width=F,len=F,case=F,slack=F (enables relaxed mode)");
  lemma_run->add_flag("--strict", lr_strict, "strict mode: verify every precondition");
  lemma_run->add_option("--out", lr_out, "trace output path (stdout when omitted)");
  lemma_run->callback([&] {
    Graph g = combgraph::load_graph(lr_graph);
    Blockade b = combgraph::load_blockade(lr_blockade, g.size());
    combgraph::LemmaParams params;
    params.k = lr_k;
    params.d = lr_d;
    params.tau = lr_tau;
    params.constants = combgraph::compute_constants(lr_k, lr_d);
    combgraph::RelaxFactors relax;
    if (!lr_relax.empty()) {
      relax = parse_relax(lr_relax);
    } else {
      relax.relaxed = !lr_strict;
    }
    auto trace = combgraph::main_lemma_procedure(g, b, params, relax);
    write_or_print(combgraph::trace_to_json(trace), lr_out);
  });

  // ---- suite --------------------------------------------------------------
  auto* suite = app.add_subcommand("suite", "run a declarative check suite");
  std::string suite_config, suite_out, suite_format = "json";
  std::uint64_t suite_seed = 0;
  int suite_trials = -1;
  suite->add_option("--config", suite_config, "suite config json path")->required();
  suite->add_option("--out", suite_out, "report path (stdout when omitted)");
  suite->add_option("--format", suite_format, "json | csv");
  suite->add_option("--seed", suite_seed, "override every suite seed");
  suite->add_option("--trials", suite_trials, "override every suite trial count");
  suite->callback([&] {
    combgraph::SuiteOptions options;
    options.format = suite_format;
    if (suite->count("--seed") > 0) options.seed_override = suite_seed;
    if (suite_trials >= 0) options.trials_override = suite_trials;
    int failed;
    if (suite_out.empty()) {
      failed = combgraph::run_suite_file(suite_config, std::cout, options);
    } else {
      std::ofstream out(suite_out);
      if (!out) throw combgraph::Error("cannot write " + suite_out);
      failed = combgraph::run_suite_file(suite_config, out, options);
    }
    if (failed > 0) throw CLI::RuntimeError("suite failures: " + std::to_string(failed), 1);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
