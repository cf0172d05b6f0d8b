#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "idom/demand.hpp"
#include "idom/generators.hpp"
#include "idom/graph.hpp"
#include "idom/satgraph.hpp"

namespace idom {

/// A suite applied to input it cannot handle, such as lemma6 on a corpus.
class SuiteUsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Serial runs are the reference; parallel runs must produce identical reports.
enum class Execution { Serial, Parallel };

/// One corpus member. Weights and partition are present when the suite needs them.
struct Instance {
  Graph graph;
  std::optional<std::vector<Weight>> weights;
  std::optional<SatPartition> partition;
  std::vector<Demand> demands;
  /// A planted module, for substitution checks.
  std::optional<VertexSet> module;
  std::uint64_t seed = 0;

  WeightedGraph weighted() const;
};

enum class Suite { Obs1, Obs2, Lemma1, Lemma2, Thm1, Lemma6, Solver, Constrained, TreeBounds, Substitution };

std::string suite_name(Suite s);
/// Accepts the names printed by suite_name; throws SuiteUsageError otherwise.
Suite parse_suite(const std::string& name);

struct InstanceFailure {
  std::size_t index = 0;
  std::string detail;

  friend bool operator==(const InstanceFailure&, const InstanceFailure&) = default;
};

struct SuiteReport {
  Suite suite = Suite::Solver;
  std::size_t total = 0;
  std::size_t passed = 0;
  /// In input order.
  std::vector<InstanceFailure> failures;

  bool ok() const { return passed == total; }
  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

/// Checks a single instance; an empty optional means it passed. Exceptions other
/// than SuiteUsageError are reported as failures.
std::optional<std::string> check_instance(Suite suite, const Instance& inst);

/// Runs check_instance over the corpus. Failures are collected in input order
/// for both execution modes. Lemma6 ignores the corpus; use check_lemma6.
SuiteReport run_suite(Suite suite, const std::vector<Instance>& corpus, Execution exec);

// Seeded corpus builders. Instance i depends only on (seed, i).

/// Random (P5, co-P5)-free graphs with 1..max_n vertices and weights in [0, 100].
std::vector<Instance> random_class_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n = 12);
/// Substitution-built (P5, co-P5)-free graphs with up to max_n vertices, weights in [0, 100].
std::vector<Instance> substitution_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n = 18);
/// Adds 0..3 random demands (hitsets of 1..3 vertices) to each instance.
std::vector<Instance> with_random_demands(std::vector<Instance> corpus, std::uint64_t seed);
/// Random sat-graphs with their partitions, at most max_n vertices and at least one A-B edge.
std::vector<Instance> sat_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n = 14);
/// Random (C3, C4, C5, C6)-free graphs with 1..max_n vertices.
std::vector<Instance> cycle_free_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n = 9);
/// Planted-module instances with weights in [0, 100].
std::vector<Instance> planted_corpus(std::uint64_t seed, std::size_t count);

/// Corpus for a suite. Solver, Constrained and TreeBounds mix random and
/// substitution-built graphs, every sixth instance being substitution-built.
std::vector<Instance> default_corpus(Suite suite, std::uint64_t seed, std::size_t count);

struct Lemma6Report {
  std::size_t max_n = 0;
  std::uint64_t graphs = 0;
  /// Non-complete graphs with neither an antisimplicial vertex nor a C5 shape,
  /// which then had to be classified.
  std::uint64_t classified = 0;
  std::uint64_t failures = 0;
  /// Smallest failing graph, by order and then edge mask.
  std::optional<Graph> counterexample;

  bool ok() const { return failures == 0; }
  friend bool operator==(const Lemma6Report&, const Lemma6Report&) = default;
};

/// Every labelled graph on 1..max_n vertices that is prime, non-complete and
/// (P5, co-P5)-free must be a C5 or have an antisimplicial vertex.
Lemma6Report check_lemma6(std::size_t max_n, Execution exec);

/// Labelled graph on n vertices whose edges are the set bits of `mask` in the
/// order (0,1), (0,2), (1,2), (0,3), ...
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

}  // namespace idom
