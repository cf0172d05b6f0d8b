#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "idom/graph.hpp"
#include "idom/patterns.hpp"
#include "idom/satgraph.hpp"

namespace idom {

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Seeded source of randomness. Only raw engine output is consumed, so streams
/// are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  bool bernoulli(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }
  /// Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t span = hi - lo + 1;
    if (span == 0) return engine_();
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + x % span;
  }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// DOMINO, SUN3, BULL, K2_PLUS_K1, or a family with its size appended:
/// P4, C6, K5, STAR3 (= K1,3), E3 (edgeless). Throws GenerationError.
Graph named(std::string_view name);

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph edgeless(std::size_t n);
Graph star(std::size_t leaves);

Graph gnp(std::size_t n, double p, Rng& rng);

/// `count` G(n, p) samples free of every forbidden pattern, by rejection.
/// Throws GenerationError once `budget` samples have been rejected.
std::vector<Graph> gnp_filtered(std::size_t n, double p, const std::vector<PatternId>& forbidden,
                                std::uint64_t seed, std::size_t count, std::size_t budget = 200000);

struct SatInstance {
  Graph graph;
  SatPartition partition;
};

/// A = 0..size_a-1 as a clique, B pairs (size_a + 2i, size_a + 2i + 1). Each
/// (a, b) edge is added with probability p_ab unless a already sees b's partner.
SatInstance sat_random(std::size_t size_a, std::size_t match_b, double p_ab, std::uint64_t seed);

/// Replaces `slot` of h by a copy of g that inherits slot's neighbours. The
/// copy occupies ids slot .. slot+|g|-1; later vertices of h shift up.
Graph substitute(const Graph& h, Vertex slot, const Graph& g);

/// A (P5, co-P5)-free graph on n vertices by rejection sampling at a random
/// density; when `prime` is set only prime samples are accepted.
Graph random_p5_free(std::size_t n, Rng& rng, bool prime = false, std::size_t budget = 200000);

/// (P5, co-P5)-free graph on exactly n vertices grown by repeated substitution
/// of small (P5, co-P5)-free factors.
Graph substitution_instance(std::size_t n, std::uint64_t seed);

struct PlantedModule {
  Graph graph;
  VertexSet module;
};

/// Substitutes a random (P5, co-P5)-free graph of size inner_n into a random
/// slot of a random (P5, co-P5)-free host of size outer_n.
PlantedModule planted_module(std::size_t outer_n, std::size_t inner_n, std::uint64_t seed);

std::vector<Weight> random_weights(std::size_t n, Weight lo, Weight hi, Rng& rng);

}  // namespace idom
