#include "combgraph/suite.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <vector>

#include "combgraph/errors.hpp"
#include "combgraph/io.hpp"
#include "combgraph/verify.hpp"
#include "json.hpp"

namespace combgraph {

namespace {

using nlohmann::json;
using verify::Outcome;

using CheckFn = std::function<Outcome(const json& params, std::uint64_t seed, int trial)>;

int geti(const json& p, const char* key, int def) {
  return p.contains(key) ? p.at(key).get<int>() : def;
}

std::string gets(const json& p, const char* key, const std::string& def) {
  return p.contains(key) ? p.at(key).get<std::string>() : def;
}

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"cograph-closure-equivalence",
       [](const json& p, std::uint64_t, int) {
         return verify::cograph_closure_equivalence(geti(p, "max_n", 6));
       }},
      {"homogeneous-bound",
       [](const json& p, std::uint64_t seed, int trial) {
         return verify::homogeneous_bound_trial(seed, trial, geti(p, "min_leaves", 4),
                                                geti(p, "max_leaves", 100));
       }},
      {"comb-dichotomy",
       [](const json& p, std::uint64_t seed, int trial) {
         return verify::comb_dichotomy_trial(seed, trial, geti(p, "max_side", 40));
       }},
      {"layer-invariants",
       [](const json&, std::uint64_t seed, int trial) {
         return verify::layer_invariants_trial(seed, trial);
       }},
      {"pure-blockade-base",
       [](const json& p, std::uint64_t seed, int trial) {
         return verify::pure_blockade_trial(seed, trial, geti(p, "s", 1));
       }},
      {"rainbow-minor-reduction",
       [](const json&, std::uint64_t seed, int trial) {
         return verify::rainbow_minor_trial(seed, trial);
       }},
      {"constants-bracketing",
       [](const json&, std::uint64_t, int) { return verify::constants_bracketing(); }},
      {"lemma-invariants",
       [](const json&, std::uint64_t seed, int trial) {
         return verify::lemma_invariants_trial(seed, trial);
       }},
      {"lemma-planted",
       [](const json&, std::uint64_t seed, int trial) {
         return verify::lemma_planted_trial(seed, trial);
       }},
      {"strong-symmetry-exhaustive",
       [](const json& p, std::uint64_t, int) {
         return verify::strong_symmetry_exhaustive(geti(p, "max_n", 5), geti(p, "k", 2));
       }},
      {"strong-symmetry-sampled",
       [](const json& p, std::uint64_t seed, int trial) {
         return verify::strong_symmetry_sampled_trial(seed, trial, geti(p, "n", 6),
                                                      geti(p, "k", 2));
       }},
      {"generator-validity",
       [](const json& p, std::uint64_t seed, int trial) {
         return verify::generator_validity_trial(seed, trial, gets(p, "kind", "gnp"));
       }},
  };
  return table;
}

const CheckFn* find_check(const std::string& name) {
  for (const auto& [key, fn] : registry()) {
    if (key == name) return &fn;
  }
  return nullptr;
}

void emit(std::ostream& out, const std::string& format, const std::string& suite,
          int instance, std::uint64_t seed, const Outcome& o) {
  if (format == "csv") {
    std::string detail = o.detail;
    for (auto& ch : detail) {
      if (ch == ',') ch = ';';
    }
    out << suite << "," << instance << "," << seed << "," << (o.pass ? "pass" : "fail")
        << "," << detail << "\n";
  } else {
    json line{{"suite", suite},
              {"instance", instance},
              {"seed", seed},
              {"pass", o.pass},
              {"detail", o.detail}};
    out << line.dump() << "\n";
  }
}

}  // namespace

int run_suite_text(const std::string& config_text, std::ostream& out,
                   const SuiteOptions& options) {
  json cfg;
  try {
    cfg = json::parse(config_text);
  } catch (const json::exception& e) {
    throw Error(std::string("suite config: parse error: ") + e.what());
  }
  if (!cfg.is_object() || !cfg.contains("suites") || !cfg.at("suites").is_array()) {
    throw Error("suite config: expected {\"suites\": [...]}");
  }
  auto start = std::chrono::steady_clock::now();
  int total = 0, failed = 0;
  int entry_index = 0;
  for (const auto& entry : cfg.at("suites")) {
    std::string where = "suite config: suites[" + std::to_string(entry_index) + "]";
    if (!entry.is_object() || !entry.contains("check")) {
      throw Error(where + ": missing \"check\"");
    }
    std::string check = entry.at("check").get<std::string>();
    std::string name = entry.value("name", check);
    const CheckFn* fn = find_check(check);
    if (!fn) throw Error(where + ": unknown check \"" + check + "\"");
    int trials = options.trials_override.value_or(entry.value("trials", 1));
    std::uint64_t seed = options.seed_override.value_or(
        entry.value("seed", static_cast<std::uint64_t>(1)));
    json params = entry.value("params", json::object());
    for (int trial = 0; trial < trials; ++trial) {
      Outcome o;
      try {
        o = (*fn)(params, seed, trial);
      } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
      }
      emit(out, options.format, name, trial, seed, o);
      ++total;
      if (!o.pass) ++failed;
    }
    ++entry_index;
  }
  auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  if (options.format == "csv") {
    out << "aggregate," << total << "," << (total - failed) << "," << failed << ","
        << wall << "ms\n";
  } else {
    json agg{{"aggregate", true},
             {"total", total},
             {"passed", total - failed},
             {"failed", failed},
             {"wall_ms", wall}};
    out << agg.dump() << "\n";
  }
  return failed;
}

int run_suite_file(const std::string& config_path, std::ostream& out,
                   const SuiteOptions& options) {
  return run_suite_text(read_file(config_path), out, options);
}

}  // namespace combgraph
