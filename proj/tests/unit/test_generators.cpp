#include <doctest.h>

#include "idom/decomposition.hpp"
#include "idom/generators.hpp"
#include "idom/patterns.hpp"

using namespace idom;

TEST_CASE("named graphs") {
  Graph domino = named("DOMINO");
  CHECK(domino.order() == 6);
  CHECK(domino.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
  Graph sun = named("SUN3");
  CHECK(sun.order() == 6);
  CHECK(sun.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 5}, {2, 4}, {2, 5}});
  CHECK(named("C5") == cycle(5));
  CHECK(named("p4") == path(4));
  CHECK(named("K3") == complete(3));
  CHECK(named("E2") == edgeless(2));
  CHECK(named("STAR3") == star(3));
  CHECK(named("BULL").edge_count() == 5);
  CHECK_THROWS_AS(named("Q7"), GenerationError);
  CHECK_THROWS_AS(named("Cx"), GenerationError);
  CHECK_THROWS_AS(named("C2"), GenerationError);
}

TEST_CASE("gnp_filtered") {
  auto a = gnp_filtered(8, 0.4, {kP5, kCoP5}, 1, 10);
  CHECK(a.size() == 10);
  for (const auto& g : a) CHECK(is_free(g, {kP5, kCoP5}));

  auto b = gnp_filtered(7, 0.3, {kC3, kC4, kC5, kC6}, 2, 10);
  CHECK(b.size() == 10);
  for (const auto& g : b) CHECK(is_free(g, {kC3, kC4, kC5, kC6}));

  auto c = gnp_filtered(5, 1.0, {kP5}, 3, 1);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == complete(5));

  CHECK_THROWS_AS(gnp_filtered(6, 1.0, {kC3}, 4, 1, 5), GenerationError);
  CHECK(gnp_filtered(8, 0.4, {kP5, kCoP5}, 1, 10) == a);
}

TEST_CASE("sat_random") {
  SatInstance a = sat_random(0, 2, 0.0, 1);
  CHECK(a.graph == Graph::from_edges(4, {{0, 1}, {2, 3}}));
  CHECK(a.partition.a.empty());
  CHECK(a.partition.b == VertexSet::full(4));

  SatInstance b = sat_random(3, 0, 0.7, 1);
  CHECK(b.graph == complete(3));
  CHECK(b.partition.a == VertexSet::full(3));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SatInstance s = sat_random(seed % 5, seed % 4, 0.1 * static_cast<double>(seed % 10), seed);
    CHECK(verify_sat_partition(s.graph, s.partition.a, s.partition.b).ok());
  }
}

TEST_CASE("substitute") {
  Graph s = substitute(complete(2), 0, edgeless(2));
  CHECK(s == Graph::from_edges(3, {{0, 2}, {1, 2}}));
  CHECK(s.edge_count() == star(2).edge_count());

  Graph bull = named("BULL");
  for (Vertex v = 0; v < 5; ++v) CHECK(substitute(bull, v, edgeless(1)) == bull);

  Graph g = substitute(cycle(5), 2, path(3));
  CHECK(g.order() == 7);
  CHECK(is_module(g, VertexSet(7, {2, 3, 4})));
  CHECK_THROWS_AS(substitute(cycle(5), 5, path(2)), GraphError);
}

TEST_CASE("substitution instances stay in the class") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    std::size_t n = 1 + seed % 18;
    Graph g = substitution_instance(n, seed);
    CHECK(g.order() == n);
    CHECK(is_free(g, {kP5, kCoP5}));
    CHECK(substitution_instance(n, seed) == g);
  }
}

TEST_CASE("planted modules") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    PlantedModule pm = planted_module(2 + seed % 6, 2 + seed % 4, seed);
    CHECK(pm.module.size() == 2 + seed % 4);
    CHECK(is_module(pm.graph, pm.module));
    CHECK(is_free(pm.graph, {kP5, kCoP5}));
  }
}

TEST_CASE("random_p5_free prime samples") {
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    Graph g = random_p5_free(5, rng, true);
    CHECK(is_prime(g));
    CHECK(is_free(g, {kP5, kCoP5}));
  }
}

TEST_CASE("rng reproducibility") {
  Rng a(7), b(7);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(7);
  for (int i = 0; i < 1000; ++i) {
    auto x = c.uniform(3, 9);
    CHECK(x >= 3);
    CHECK(x <= 9);
  }
  auto w = random_weights(50, 0, 100, c);
  for (auto x : w) CHECK((x >= 0 && x <= 100));
}
