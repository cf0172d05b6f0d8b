#include <doctest.h>

#include "idom/generators.hpp"
#include "idom/io.hpp"
#include "idom/patterns.hpp"
#include "idom/validate.hpp"

using namespace idom;

namespace {

std::string fingerprint(const std::vector<Instance>& corpus) {
  std::string s;
  for (const auto& inst : corpus) s += emit_graph_file(inst.graph, inst.weights ? &*inst.weights : nullptr);
  return s;
}

}  // namespace

TEST_CASE("suite names") {
  for (Suite s : {Suite::Obs1, Suite::Obs2, Suite::Lemma1, Suite::Lemma2, Suite::Thm1, Suite::Lemma6, Suite::Solver,
                  Suite::Constrained, Suite::TreeBounds, Suite::Substitution})
    CHECK(parse_suite(suite_name(s)) == s);
  CHECK_THROWS_AS(parse_suite("lemma3"), SuiteUsageError);
}

TEST_CASE("corpora are reproducible and well-formed") {
  CHECK(fingerprint(random_class_corpus(3, 40)) == fingerprint(random_class_corpus(3, 40)));
  CHECK(fingerprint(random_class_corpus(3, 40)) != fingerprint(random_class_corpus(4, 40)));
  // Instance i depends only on (seed, i).
  auto longer = random_class_corpus(3, 50);
  longer.resize(40);
  CHECK(fingerprint(longer) == fingerprint(random_class_corpus(3, 40)));

  for (const auto& inst : random_class_corpus(1, 100)) {
    CHECK(inst.graph.order() >= 1);
    CHECK(inst.graph.order() <= 12);
    CHECK(is_free(inst.graph, {kP5, kCoP5}));
  }
  for (const auto& inst : substitution_corpus(1, 50)) {
    CHECK(inst.graph.order() <= 18);
    CHECK(is_free(inst.graph, {kP5, kCoP5}));
  }
  for (const auto& inst : sat_corpus(1, 100)) {
    REQUIRE(inst.partition);
    CHECK(inst.graph.order() <= 14);
    CHECK(verify_sat_partition(inst.graph, inst.partition->a, inst.partition->b).ok());
  }
  for (const auto& inst : cycle_free_corpus(1, 100)) {
    CHECK(inst.graph.order() <= 9);
    CHECK(is_free(inst.graph, {kC3, kC4, kC5, kC6}));
  }
  for (const auto& inst : planted_corpus(1, 50)) CHECK(inst.module);
  auto mixed = default_corpus(Suite::Solver, 1, 12);
  CHECK(mixed.size() == 12);
  for (const auto& inst : default_corpus(Suite::Constrained, 1, 30))
    for (const auto& d : inst.demands) CHECK(!d.hitset.empty());
}

TEST_CASE("parallel suites match the serial reference") {
  for (Suite s : {Suite::Solver, Suite::Constrained, Suite::TreeBounds, Suite::Obs1, Suite::Obs2, Suite::Lemma1,
                  Suite::Lemma2, Suite::Thm1, Suite::Substitution}) {
    auto corpus = default_corpus(s, 77, 60);
    SuiteReport serial = run_suite(s, corpus, Execution::Serial);
    SuiteReport parallel = run_suite(s, corpus, Execution::Parallel);
    CHECK(serial == parallel);
    CHECK(serial.ok());
    CHECK(serial.total == 60);
  }
}

TEST_CASE("failures are reported in input order") {
  std::vector<Instance> corpus(4);
  corpus[0].graph = complete(3);
  corpus[1].graph = cycle(5);
  corpus[2].graph = path(3);
  corpus[3].graph = cycle(5);
  for (Execution e : {Execution::Serial, Execution::Parallel}) {
    SuiteReport r = run_suite(Suite::Obs2, corpus, e);
    CHECK(r.passed == 2);
    REQUIRE(r.failures.size() == 2);
    CHECK(r.failures[0].index == 1);
    CHECK(r.failures[1].index == 3);
  }
  CHECK_THROWS_AS(run_suite(Suite::Lemma6, corpus, Execution::Serial), SuiteUsageError);
  CHECK_THROWS_AS(run_suite(Suite::Substitution, corpus, Execution::Parallel), SuiteUsageError);
}

TEST_CASE("mask enumeration") {
  CHECK(graph_from_mask(3, 0b001) == Graph::from_edges(3, {{0, 1}}));
  CHECK(graph_from_mask(3, 0b010) == Graph::from_edges(3, {{0, 2}}));
  CHECK(graph_from_mask(3, 0b100) == Graph::from_edges(3, {{1, 2}}));
  CHECK(graph_from_mask(4, 0b111111) == complete(4));
}

TEST_CASE("exhaustive antisimplicial check") {
  Lemma6Report serial = check_lemma6(6, Execution::Serial);
  Lemma6Report parallel = check_lemma6(6, Execution::Parallel);
  CHECK(serial == parallel);
  CHECK(serial.ok());
  // 1 + 2 + 8 + 64 + 1024 + 32768 labelled graphs.
  CHECK(serial.graphs == 33867);
  CHECK(serial.classified > 0);
  CHECK_THROWS_AS(check_lemma6(12, Execution::Serial), std::invalid_argument);
}
