#include "idom/hardness.hpp"

#include "idom/patterns.hpp"

namespace idom {

WidReduction build_wid_reduction(const Graph& source) {
  std::size_t n = source.order();
  WidReduction r;
  r.source = source;
  r.layer_map.resize(n);
  for (Vertex v = 0; v < n; ++v) r.layer_map[v] = {3 * v, 3 * v + 1, 3 * v + 2};

  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    edges.emplace_back(3 * v, 3 * v + 1);
    edges.emplace_back(3 * v + 1, 3 * v + 2);
  }
  for (auto [w, v] : source.edges()) {
    edges.emplace_back(3 * w + 1, 3 * v + 2);
    edges.emplace_back(3 * w + 2, 3 * v + 1);
  }
  for (Vertex w = 0; w < n; ++w)
    for (Vertex v = w + 1; v < n; ++v) edges.emplace_back(3 * w + 2, 3 * v + 2);

  std::vector<Weight> weights(3 * n);
  for (Vertex v = 0; v < n; ++v) {
    weights[3 * v] = 1;
    weights[3 * v + 1] = 2;
    weights[3 * v + 2] = static_cast<Weight>(2 * n);
  }
  Graph target = Graph::from_edges(3 * n, edges);

  VertexSet a(3 * n), b(3 * n);
  for (Vertex v = 0; v < n; ++v) {
    a.insert(3 * v + 2);
    b.insert(3 * v);
    b.insert(3 * v + 1);
  }
  r.claimed_partition = SatPartition::make(target, std::move(a), std::move(b));
  r.target = WeightedGraph(std::move(target), std::move(weights));
  return r;
}

ReductionClassReport check_reduction_class(const WidReduction& r) {
  ReductionClassReport rep;
  const Graph& t = r.target.graph();
  auto verdict = verify_sat_partition(t, r.claimed_partition.a, r.claimed_partition.b);
  rep.sat_partition_ok = verdict.ok();
  rep.sat_detail = verdict.ok() ? "ok" : verdict.detail;
  rep.c4_free = !find_induced(t, kC4).has_value();
  rep.source_in_class = is_free(r.source, {kC3, kC4, kC5, kC6});
  rep.sun3_free = !find_induced(t, kSun3).has_value();
  return rep;
}

EquivalenceReport check_reduction_equivalence(const Graph& source, std::size_t max_source_vertices) {
  if (source.order() > max_source_vertices)
    throw OracleLimitExceeded("reduction equivalence bound exceeded: n=" + std::to_string(source.order()) + " > " +
                              std::to_string(max_source_vertices));
  auto r = build_wid_reduction(source);
  EquivalenceReport rep;
  rep.gamma_dom = oracle_min_dominating(source, {max_source_vertices}).value;
  rep.idw_target = oracle_wid(r.target, {3 * max_source_vertices}).value;
  rep.equal = rep.idw_target == static_cast<Weight>(source.order()) + rep.gamma_dom;
  return rep;
}

VertexSet dominating_to_target(const WidReduction& r, const VertexSet& dominating) {
  VertexSet out(r.target.order());
  for (Vertex v = 0; v < r.source.order(); ++v) out.insert(r.layer_map[v][dominating.contains(v) ? 1 : 0]);
  return out;
}

VertexSet target_to_dominating(const WidReduction& r, const VertexSet& target_set) {
  VertexSet out(r.source.order());
  for (Vertex v = 0; v < r.source.order(); ++v)
    if (target_set.contains(r.layer_map[v][1])) out.insert(v);
  return out;
}

}  // namespace idom
