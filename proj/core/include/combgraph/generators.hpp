#ifndef COMBGRAPH_GENERATORS_HPP
#define COMBGRAPH_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "combgraph/blockade.hpp"
#include "combgraph/cograph.hpp"
#include "combgraph/graph.hpp"

namespace combgraph {

// Deterministic splitmix-style RNG; one instance per generated object,
// derived from (master seed, instance index). No global state.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double next_double() { return (next() >> 11) * 0x1.0p-53; }

  int next_below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % n); }

  static SplitMix64 for_instance(std::uint64_t master, std::uint64_t instance) {
    SplitMix64 rng(master + 0x9E3779B97F4A7C15ULL * (instance + 1));
    rng.next();
    return rng;
  }
};

enum class GenKind { Gnp, CographRandom, PlantedComb, RainbowFreeRejection };

struct GeneratorSpec {
  GenKind kind = GenKind::Gnp;
  std::uint64_t seed = 0;

  // gnp
  int n = 10;
  double p = 0.5;

  // cograph-random
  int leaves = 8;
  double join_bias = 0.5;

  // planted-comb
  int teeth = 6;
  int tooth_size = 4;
  double noise = 0.0;

  // rainbow-free-rejection
  int k = 2;
  int blocks = 4;
  int block_size = 3;
  int max_attempts = 64;
  double edge_prob = 0.1;
};

GenKind gen_kind_from_string(const std::string& s);

struct Generated {
  Graph graph;
  std::optional<Blockade> blockade;
  std::optional<Cotree> cotree;  // cograph-random only
  int attempts = 1;
};

// Deterministic per (spec, seed). rainbow-free-rejection resamples until the
// freeness oracle accepts, failing explicitly after max_attempts.
Generated generate(const GeneratorSpec& spec);

}  // namespace combgraph

#endif
