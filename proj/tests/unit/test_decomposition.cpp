#include <doctest.h>

#include "brute.hpp"
#include "idom/decomposition.hpp"
#include "idom/generators.hpp"

using namespace idom;

TEST_CASE("homogeneous sets") {
  CHECK(find_homogeneous_set(cycle(4)) == VertexSet(4, {0, 2}));
  CHECK_FALSE(find_homogeneous_set(path(4)));
  CHECK(find_homogeneous_set(named("K2_PLUS_K1")) == VertexSet(3, {0, 1}));
  CHECK(is_prime(path(4)));
  CHECK(is_prime(named("BULL")));
  for (std::size_t n = 3; n <= 6; ++n) CHECK_FALSE(is_prime(complete(n)));
  CHECK(is_module(cycle(4), VertexSet(4, {1, 3})));
  CHECK_FALSE(is_module(path(4), VertexSet(4, {0, 1})));
  CHECK(module_closure(path(4), 0, 1) == VertexSet::full(4));
}

TEST_CASE("primality agrees with subset enumeration") {
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = rng.uniform(0, 9);
    Graph g = gnp(n, static_cast<double>(rng.uniform(1, 9)) / 10.0, rng);
    auto m = find_homogeneous_set(g);
    REQUIRE(m.has_value() == brute::has_module(g));
    if (m) {
      CHECK(is_module(g, *m));
      CHECK(m->size() >= 2);
      CHECK(m->size() < n);
    }
  }
}

TEST_CASE("good vertices") {
  CHECK(find_good_vertex(cycle(5)) == 0);
  Subgraph c5 = induced_subgraph(cycle(5), antineighborhood(cycle(5), 0));
  // K2 + K1 with the isolated vertex first.
  CHECK(c5.graph == Graph::from_edges(3, {{1, 2}}));

  // G - N(0) = {0, 2, 3} carries one edge, so vertex 0 already qualifies;
  // vertex 1 is the antisimplicial one.
  Graph p4 = path(4);
  CHECK(find_good_vertex(p4) == 0);
  CHECK(edges_within(p4, antineighborhood(p4, 1)) == 0);
  CHECK(antineighborhood(p4, 1) == VertexSet(4, {1, 3}));

  Graph bull = named("BULL");
  Vertex b = find_good_vertex(bull);
  CHECK(b == 1);
  CHECK(edges_within(bull, antineighborhood(bull, b)) == 0);
}

TEST_CASE("NotInClass carries a witness") {
  // C7 is prime and every antineighbourhood induces P4.
  Graph c7 = cycle(7);
  try {
    find_good_vertex(c7);
    FAIL("expected NotInClass");
  } catch (const NotInClass& e) {
    REQUIRE(e.witness());
    CHECK(e.witness()->pattern == kP5);
    CHECK(verify_occurrence(c7, *e.witness()));
    CHECK(e.subgraph() == c7);
  }
  CHECK_THROWS_AS(build_tree(c7), NotInClass);
}

TEST_CASE("tree shapes") {
  DecompTree k5 = build_tree(complete(5));
  CHECK(k5.node_count() == 1);
  CHECK(k5.root().kind == NodeKind::LeafComplete);

  DecompTree k2k1 = build_tree(named("K2_PLUS_K1"));
  CHECK(k2k1.node_count() == 1);
  CHECK(k2k1.root().kind == NodeKind::LeafF);

  DecompTree c4 = build_tree(cycle(4));
  const DecompNode& root = c4.root();
  CHECK(root.kind == NodeKind::Homogeneous);
  CHECK(root.module == VertexSet(4, {0, 2}));
  CHECK(root.representative == 0);
  REQUIRE(root.children.size() == 2);
  const DecompNode& inner = c4.nodes[root.children[0]];
  CHECK(inner.kind == NodeKind::LeafF);
  CHECK(inner.graph == edgeless(2));
  CHECK(inner.to_root == std::vector<Vertex>{0, 2});
  const DecompNode& outer = c4.nodes[root.children[1]];
  CHECK(outer.graph == Graph::from_edges(3, {{0, 1}, {0, 2}}));
  CHECK(outer.to_root == std::vector<Vertex>{0, 1, 3});
  CHECK(labels_distinct(c4));
  CHECK(c4.internal_count() <= 12);

  DecompTree c5 = build_tree(cycle(5));
  CHECK(c5.root().kind == NodeKind::Antineighborhood);
  CHECK(c5.root().branch_vertex == 0);
  CHECK(c5.root().label == std::make_pair(Vertex{0}, Vertex{1}));
}

TEST_CASE("tree invariants on random class members") {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    Graph g = substitution_instance(rng.uniform(1, 16), rng.next());
    DecompTree t = build_tree(g);
    CHECK(labels_distinct(t));
    for (std::size_t k = 0; k < t.nodes.size(); ++k) {
      const auto& node = t.nodes[k];
      for (auto c : node.children) CHECK(c > k);
      if (node.kind == NodeKind::Homogeneous) CHECK(is_module(node.graph, node.module));
      if (node.is_leaf()) CHECK((node.graph.edge_count() <= 1 || is_complete(node.graph)));
      for (std::size_t v = 0; v < node.graph.order(); ++v)
        for (std::size_t u = v + 1; u < node.graph.order(); ++u)
          CHECK(node.graph.adjacent(v, u) == g.adjacent(node.to_root[v], node.to_root[u]));
    }
  }
}
