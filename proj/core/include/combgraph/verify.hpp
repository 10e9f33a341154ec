#ifndef COMBGRAPH_VERIFY_HPP
#define COMBGRAPH_VERIFY_HPP

#include <cstdint>
#include <string>

namespace combgraph::verify {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Recognition agrees with the brute-force family closure on every labeled
// graph with up to max_n vertices; accepted cotrees re-evaluate to the input.
Outcome cograph_closure_equivalence(int max_n);

// Random cotree with `leaves` in [min_leaves, max_leaves]; the extracted set
// is homogeneous in the evaluated graph and has >= ceil(sqrt(leaves)) members.
Outcome homogeneous_bound_trial(std::uint64_t seed, int trial, int min_leaves, int max_leaves);

// Random bipartite instance; whichever branch comb_or_bound returns must
// re-validate against independently recomputed quantities.
Outcome comb_dichotomy_trial(std::uint64_t seed, int trial, int max_side);

// Layer construction invariants: tooth sizes between (2/3)^s delta and
// (2/3)^(s-1) delta, no apex adjacent to a later tooth of its layer, and no
// apex adjacent to any tooth of a later layer.
Outcome layer_invariants_trial(std::uint64_t seed, int trial);

// Halving recursion on generated rainbow (2 choose 2)-free blockades: output
// is a pure blockade of length 2^s, width >= W/D_s, with a cograph pattern.
Outcome pure_blockade_trial(std::uint64_t seed, int trial, int s);

// Generated comb-over-blockade instances with k = 3: the reduction output
// passes the rainbow (2 choose 2)-freeness oracle.
Outcome rainbow_minor_trial(std::uint64_t seed, int trial);

// K = 2, D_1 = 4, L0 brackets (holds at L0, fails at L0 - 1), tau0 brackets.
Outcome constants_bracketing();

// Relaxed-mode procedure run on a degree-capped random blockade: every step
// passes its strict bound checks, nesting and anticompleteness hold.
Outcome lemma_invariants_trial(std::uint64_t seed, int trial);

// Planted-comb instance: the procedure ends in a validated comb.
Outcome lemma_planted_trial(std::uint64_t seed, int trial);

// Strong freeness verdict class is complement-symmetric.
Outcome strong_symmetry_exhaustive(int max_n, int k);
Outcome strong_symmetry_sampled_trial(std::uint64_t seed, int trial, int n, int k);

// Structural validity of generator outputs for a given kind string.
Outcome generator_validity_trial(std::uint64_t seed, int trial, const std::string& kind);

}  // namespace combgraph::verify

#endif
