#include <doctest.h>

#include "brute.hpp"
#include "idom/generators.hpp"
#include "idom/oracle.hpp"
#include "idom/patterns.hpp"
#include "idom/satgraph.hpp"

using namespace idom;

namespace {

// P3 a-b-c as 0-1-2 with A = {a}.
SatPartition p3_partition(const Graph& g) { return SatPartition::make(g, VertexSet(3, {0}), VertexSet(3, {1, 2})); }

// Sun3 with a pendant partner 6, 7, 8 on each of its degree-2 vertices 3, 4, 5.
Graph padded_sun() {
  auto e = named("SUN3").edges();
  e.insert(e.end(), {{3, 6}, {4, 7}, {5, 8}});
  return Graph::from_edges(9, e);
}

}  // namespace

TEST_CASE("verify_sat_partition") {
  Graph domino = named("DOMINO");
  // Figure labels A = {3, 4}, B = {1, 2, 5, 6}.
  CHECK(verify_sat_partition(domino, VertexSet(6, {2, 3}), VertexSet(6, {0, 1, 4, 5})).ok());
  CHECK(verify_sat_partition(complete(3), VertexSet::full(3), VertexSet(3)).ok());

  Graph c5 = cycle(5);
  for (std::uint32_t mask = 0; mask < 32; ++mask) {
    VertexSet a(5);
    for (Vertex v = 0; v < 5; ++v)
      if (mask >> v & 1U) a.insert(v);
    CHECK_FALSE(verify_sat_partition(c5, a, a.complement()).ok());
  }

  auto overlap = verify_sat_partition(path(2), VertexSet(2, {0}), VertexSet(2, {0, 1}));
  CHECK(overlap.violation == SatViolation::NotPartition);
  auto notclique = verify_sat_partition(edgeless(2), VertexSet::full(2), VertexSet(2));
  CHECK(notclique.violation == SatViolation::ANotClique);
  auto notmatching = verify_sat_partition(path(3), VertexSet(3), VertexSet::full(3));
  CHECK(notmatching.violation == SatViolation::BNotMatching);
  auto triangle = verify_sat_partition(complete(3), VertexSet(3, {0}), VertexSet(3, {1, 2}));
  CHECK(triangle.violation == SatViolation::Triangle);
  CHECK_FALSE(triangle.detail.empty());
}

TEST_CASE("find_sat_partition") {
  // Sun3 alone has no sat-partition: its outer vertices are pairwise
  // non-adjacent, so B = {3, 4, 5} is not 1-regular.
  CHECK_FALSE(find_sat_partition(named("SUN3")));
  CHECK(verify_sat_partition(named("SUN3"), VertexSet(6, {0, 1, 2}), VertexSet(6, {3, 4, 5})).violation ==
        SatViolation::BNotMatching);
  auto sun = find_sat_partition(padded_sun());
  REQUIRE(sun);
  CHECK(sun->a == VertexSet(9, {0, 1, 2}));
  CHECK(sun->b == VertexSet(9, {3, 4, 5, 6, 7, 8}));
  CHECK(sun->s() == 3);

  CHECK_FALSE(find_sat_partition(cycle(5)));

  auto k2k1 = find_sat_partition(named("K2_PLUS_K1"));
  REQUIRE(k2k1);
  CHECK(k2k1->a == VertexSet(3, {2}));
  CHECK(k2k1->b == VertexSet(3, {0, 1}));

  CHECK_THROWS_AS(find_sat_partition(edgeless(21)), SatSearchLimitExceeded);
}

TEST_CASE("sat recognition agrees with split enumeration") {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = rng.uniform(0, 9);
    Graph g = gnp(n, static_cast<double>(rng.uniform(1, 9)) / 10.0, rng);
    auto p = find_sat_partition(g);
    REQUIRE(p.has_value() == brute::is_sat_graph(g));
    if (p) CHECK(verify_sat_partition(g, p->a, p->b).ok());
  }
}

TEST_CASE("gamma on P3") {
  Graph p3 = path(3);
  GammaResult r = gamma_transform(p3, p3_partition(p3), 0, 1);
  CHECK(r.v == 3);
  CHECK(r.x == 4);
  CHECK(r.y == 5);
  // a=0 b=1 c=2 v=3 x=4 y=5: edges (v,b) (b,c) (v,x) (x,y) (a,y) (v,a).
  CHECK(r.graph == Graph::from_edges(6, {{3, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 5}, {3, 0}}));
  CHECK(r.partition.a == VertexSet(6, {0, 3}));
  CHECK(r.partition.b == VertexSet(6, {1, 2, 4, 5}));
  CHECK(r.partition.b_edges == std::vector<Edge>{{1, 2}, {4, 5}});
  CHECK(verify_sat_partition(r.graph, r.partition.a, r.partition.b).ok());
  CHECK(r.markers.alpha_new == VertexSet(6, {3}));
  CHECK(r.markers.beta_new == VertexSet(6, {4, 5}));

  CHECK(oracle_id(p3).value == 1);
  OracleReport after = oracle_id(r.graph);
  CHECK(after.value == 2);
  // Witness {b, y} is among the optima.
  CHECK(is_maximal_independent(r.graph, VertexSet(6, {1, 5})));

  CHECK_THROWS_AS(gamma_transform(p3, p3_partition(p3), 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(gamma_transform(p3, p3_partition(p3), 0, 2), std::invalid_argument);
}

TEST_CASE("star_transform") {
  Graph p3 = path(3);
  StarResult one = star_transform(p3, p3_partition(p3));
  GammaResult g = gamma_transform(p3, p3_partition(p3), 0, 1);
  CHECK(one.graph == g.graph);
  CHECK(one.transformed == std::vector<Edge>{{0, 1}});
  CHECK(check_gstar_properties(one.graph, one.partition, one.markers).ok());

  Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
  SatPartition p = SatPartition::make(two_k2, VertexSet(4), VertexSet::full(4));
  StarResult none = star_transform(two_k2, p);
  CHECK(none.graph == two_k2);
  CHECK(none.transformed.empty());
}

TEST_CASE("star_transform adds one to id per A-B edge") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    SatInstance s = sat_random(rng.uniform(1, 3), rng.uniform(1, 2), 0.5, seed);
    StarResult r = star_transform(s.graph, s.partition);
    auto before = oracle_id(s.graph).value;
    CHECK(oracle_id(r.graph).value == before + static_cast<Weight>(r.transformed.size()));
    CHECK(is_free(r.graph, {kDomino, kSun3}));
    CHECK(check_gstar_properties(r.graph, r.partition, r.markers).ok());
  }
}

TEST_CASE("gstar property 1 negative control") {
  // Skip the gamma step on one A-B edge: the old A vertex stays adjacent to an old B edge.
  Graph p3 = path(3);
  SatPartition p = p3_partition(p3);
  GStarVerdict v = check_gstar_properties(p3, p, TransformMarkers::empty(3));
  CHECK(v.failed_property == 1);
}

TEST_CASE("sat-graph structural checks") {
  Graph domino = named("DOMINO");
  auto dp = find_sat_partition(domino);
  REQUIRE(dp);
  CHECK(dp->a == VertexSet(6, {2, 3}));
  CHECK_FALSE(check_obs1(domino, *dp));

  Graph sun = padded_sun();
  auto sp = find_sat_partition(sun);
  REQUIRE(sp);
  CHECK_FALSE(check_obs1(sun, *sp));
  CHECK_THROWS(check_obs1(named("SUN3"), SatPartition::make(named("SUN3"), VertexSet(6, {0, 1, 2}),
                                                            VertexSet(6, {3, 4, 5}))));

  Graph k3 = complete(3);
  CHECK_FALSE(check_obs1(k3, SatPartition::make(k3, VertexSet::full(3), VertexSet(3))));
}
