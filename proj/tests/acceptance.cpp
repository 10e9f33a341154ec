// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion pins its trial counts, sizes and tolerances in code.

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "combgraph/lemma.hpp"
#include "combgraph/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;
namespace verify = combgraph::verify;

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
  std::printf("[%s] %d. %s: %s (%.1fs)\n", pass ? "PASS" : "FAIL", index, name.c_str(),
              detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

template <typename F>
void criterion(int index, const std::string& name, F&& body) {
  auto start = Clock::now();
  verify::Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  report(index, name, o.pass, o.detail, secs);
}

verify::Outcome run_trials(int trials, std::uint64_t seed, int min_pass,
                           verify::Outcome (*trial)(std::uint64_t, int)) {
  int passed = 0;
  std::string first_fail;
  for (int i = 0; i < trials; ++i) {
    verify::Outcome o = trial(seed, i);
    if (o.pass) {
      ++passed;
    } else if (first_fail.empty()) {
      first_fail = "trial " + std::to_string(i) + ": " + o.detail;
    }
  }
  bool ok = passed >= min_pass;
  std::string detail = std::to_string(passed) + "/" + std::to_string(trials);
  if (!ok && !first_fail.empty()) detail += " — first failure: " + first_fail;
  return {ok, detail};
}

}  // namespace

int main() {
  criterion(1, "cograph oracle equivalence (all labeled graphs, n <= 6)",
            [] { return verify::cograph_closure_equivalence(6); });

  criterion(2, "homogeneous-set bound on 1000 random cographs (4 <= m <= 100)", [] {
    return run_trials(1000, 2024, 1000, [](std::uint64_t seed, int trial) {
      return verify::homogeneous_bound_trial(seed, trial, 4, 100);
    });
  });

  criterion(3, "comb-or-bound dichotomy re-validates on 500 bipartite instances", [] {
    return run_trials(500, 777, 500, [](std::uint64_t seed, int trial) {
      return verify::comb_dichotomy_trial(seed, trial, 40);
    });
  });

  criterion(4, "layer tooth-size and anticompleteness invariants on 500 builds", [] {
    return run_trials(500, 4242, 500, [](std::uint64_t seed, int trial) {
      return verify::layer_invariants_trial(seed, trial);
    });
  });

  criterion(5, "pure blockade from rainbow-free input: 200 at s=1 plus 20 at s=2", [] {
    verify::Outcome s1 = run_trials(200, 91, 200, [](std::uint64_t seed, int trial) {
      return verify::pure_blockade_trial(seed, trial, 1);
    });
    verify::Outcome s2 = run_trials(20, 92, 20, [](std::uint64_t seed, int trial) {
      return verify::pure_blockade_trial(seed, trial, 2);
    });
    return verify::Outcome{s1.pass && s2.pass, "s=1 " + s1.detail + ", s=2 " + s2.detail};
  });

  criterion(6, "rainbow-minor reduction output passes the k=2 oracle, 200 instances", [] {
    return run_trials(200, 5150, 200, [](std::uint64_t seed, int trial) {
      return verify::rainbow_minor_trial(seed, trial);
    });
  });

  criterion(7, "constants: K = 2, D_1 = 4, L0 bracketing, c0 vs 50-digit oracle", [] {
    verify::Outcome base = verify::constants_bracketing();
    if (!base.pass) return base;
    using dec50 = boost::multiprecision::cpp_dec_float_50;
    dec50 three = 3;
    dec50 half3 = dec50(3) / 2;
    dec50 oracle = boost::multiprecision::pow(three, dec50(3) / 2) /
                   (half3 - boost::multiprecision::sqrt(half3));
    combgraph::LemmaConstants c = combgraph::compute_constants(2, 2.0);
    dec50 diff = boost::multiprecision::fabs(oracle - dec50(c.c0));
    if (diff > dec50("1e-9")) {
      return verify::Outcome{false, "c0 differs from the 50-digit oracle by " +
                                        diff.convert_to<std::string>()};
    }
    return verify::Outcome{true, base.detail + ", |c0 - oracle| = " +
                                     diff.convert_to<std::string>()};
  });

  criterion(8, "trace invariants on 100 relaxed runs; planted combs in >= 95/100", [] {
    verify::Outcome inv = run_trials(100, 31337, 100, [](std::uint64_t seed, int trial) {
      return verify::lemma_invariants_trial(seed, trial);
    });
    verify::Outcome planted = run_trials(100, 1234, 95, [](std::uint64_t seed, int trial) {
      return verify::lemma_planted_trial(seed, trial);
    });
    return verify::Outcome{inv.pass && planted.pass,
                           "invariants " + inv.detail + ", planted " + planted.detail};
  });

  criterion(9, "strong-freeness verdict symmetry (exhaustive n<=5, sampled n in {6,7})", [] {
    for (int k = 2; k <= 3; ++k) {
      verify::Outcome ex = verify::strong_symmetry_exhaustive(5, k);
      if (!ex.pass) return ex;
    }
    int passed = 0, total = 0;
    for (int k = 2; k <= 3; ++k) {
      for (int n = 6; n <= 7; ++n) {
        for (int trial = 0; trial < 250; ++trial) {
          ++total;
          if (verify::strong_symmetry_sampled_trial(900 + n + 10 * k, trial, n, k).pass) {
            ++passed;
          }
        }
      }
    }
    return verify::Outcome{passed == total, "exhaustive ok, sampled " +
                                                std::to_string(passed) + "/" +
                                                std::to_string(total)};
  });

  if (failures) std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
