#include "combgraph/errors.hpp"
#include "combgraph/generators.hpp"
#include "combgraph/lemma.hpp"
#include "combgraph/verify.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace combgraph;

namespace {

Blockade blocks_of(int universe, std::vector<std::vector<int>> raw) {
  std::vector<Bits> blocks;
  for (const auto& blk : raw) {
    Bits b(universe);
    for (int v : blk) b.set(v);
    blocks.push_back(b);
  }
  return Blockade(universe, blocks);
}

LemmaParams params_kd(int k, double d, double tau) {
  LemmaParams p;
  p.k = k;
  p.d = d;
  p.tau = tau;
  p.constants = compute_constants(k, d);
  return p;
}

}  // namespace

TEST_CASE("edgeless blockade goes straight down the case (ii) path") {
  Graph g(16, {});
  auto b = blocks_of(16, {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}, {12, 13, 14, 15}});
  RelaxFactors relax;
  relax.relaxed = true;
  ConstructionTrace trace = main_lemma_procedure(g, b, params_kd(3, 2.0, 0.01), relax);
  REQUIRE(trace.outcome.kind == LemmaOutcome::Kind::CaseII);
  const auto& cert = *trace.outcome.case_ii;
  CHECK(cert.union_e == 0);
  CHECK(cert.union_w == 0);
  CHECK(cert.apex_count == 0);
  CHECK(cert.r_final == cert.r_star_size);
  CHECK(cert.r_final_edgeless);
  for (const auto& step : trace.steps) CHECK(step.delta == 0);
}

TEST_CASE("planted comb is recovered and validated") {
  GeneratorSpec spec;
  spec.kind = GenKind::PlantedComb;
  spec.teeth = 7;
  spec.tooth_size = 4;
  spec.noise = 0;
  spec.seed = 99;
  Generated gen = generate(spec);
  int n = gen.graph.size();
  int t = gen.blockade->length();

  RelaxFactors relax;
  relax.relaxed = true;
  relax.width = (spec.tooth_size / 2.0) * std::pow(double(t), 6.0) / double(n);
  relax.len = double(spec.teeth) / std::pow(double(t), 0.125);
  ConstructionTrace trace = main_lemma_procedure(gen.graph, *gen.blockade,
                                                 params_kd(3, 2.0, 0.01), relax);
  REQUIRE(trace.outcome.kind == LemmaOutcome::Kind::Comb);
  const Comb& comb = *trace.outcome.comb;
  CHECK(comb.length() == spec.teeth);
  CHECK(comb.min_tooth() == spec.tooth_size);
  CHECK(validate_comb(gen.graph, comb));
  CHECK(trace.outcome.comb_center == 0);

  // teeth are an equicardinal minor sitting in pairwise distinct blocks
  std::vector<Bits> teeth;
  for (const auto& [apex, tooth] : comb.pairs) teeth.push_back(tooth);
  Blockade minor(n, teeth);
  CHECK(is_minor_of(minor, *gen.blockade));
  CHECK(is_equicardinal(minor));
  auto idx = trace.outcome.comb_block_indices;
  std::sort(idx.begin(), idx.end());
  CHECK(std::adjacent_find(idx.begin(), idx.end()) == idx.end());

  // teeth avoid the centre's block, so the rainbow-minor reduction applies
  CHECK_NOTHROW(comb_to_rainbow_minor(gen.graph, *gen.blockade, 3,
                                      trace.outcome.comb_center, comb));
}

TEST_CASE("capped random runs keep every strict step bound") {
  for (int trial = 0; trial < 10; ++trial) {
    auto out = verify::lemma_invariants_trial(31337, trial);
    CHECK_MESSAGE(out.pass, out.detail);
  }
}

TEST_CASE("strict mode refuses with the full failure list") {
  Graph g(8, {{0, 1}});
  auto b = blocks_of(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  try {
    main_lemma_procedure(g, b, params_kd(3, 2.0, 0.01), RelaxFactors{});
    FAIL("expected a refusal");
  } catch (const PreconditionError& e) {
    std::string msg = e.what();
    CHECK(msg.find("t < L0") != std::string::npos);
    CHECK(msg.find("width != |G|/t^d") != std::string::npos);
  }
}

TEST_CASE("trace serialization carries the record") {
  Graph g(12, {{0, 1}, {2, 3}, {4, 5}});
  auto b = blocks_of(12, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}});
  RelaxFactors relax;
  relax.relaxed = true;
  ConstructionTrace trace = main_lemma_procedure(g, b, params_kd(2, 2.0, 0.05), relax);
  auto j = nlohmann::json::parse(trace_to_json(trace));
  CHECK(j["t"] == 4);
  CHECK(j["n"] == 12);
  CHECK(j["steps"].is_array());
  CHECK(j["outcome"].contains("kind"));
  CHECK(j["params"]["L0"] == trace.params.constants.l0);
  for (const auto& step : j["steps"]) {
    CHECK(step.contains("checks"));
  }
}

TEST_CASE("dense instances reach the case (i) certificate") {
  // a clique over one block keeps delta high through the checkpoint
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) edges.emplace_back(u, v);
  }
  Graph g(12, edges);
  auto b = blocks_of(12, {{0, 1, 2, 3, 4, 5}, {6, 7, 8}, {9, 10, 11}});
  RelaxFactors relax;
  relax.relaxed = true;
  relax.width = 50.0;  // make admission impossible so no comb preempts case (i)
  ConstructionTrace trace = main_lemma_procedure(g, b, params_kd(2, 2.0, 0.05), relax);
  if (trace.outcome.kind == LemmaOutcome::Kind::CaseI) {
    const auto& cert = *trace.outcome.case_i;
    CHECK_FALSE(cert.blocks.empty());
    for (size_t i = 0; i < cert.blocks.size(); ++i) {
      for (size_t j = i + 1; j < cert.blocks.size(); ++j) {
        CHECK(is_pure_pair(g, cert.blocks[i], cert.blocks[j]) == Purity::Anticomplete);
      }
    }
  } else {
    CHECK(trace.outcome.kind == LemmaOutcome::Kind::CaseII);
  }
}
