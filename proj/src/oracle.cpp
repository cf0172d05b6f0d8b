#include "idom/oracle.hpp"

#include <algorithm>
#include <string>

namespace idom {

namespace {

void check_limit(const Graph& g, OracleLimits limits) {
  if (g.order() > limits.max_vertices)
    throw OracleLimitExceeded("oracle bound exceeded: n=" + std::to_string(g.order()) +
                              " > " + std::to_string(limits.max_vertices));
}

// Bron-Kerbosch with pivoting on the complement: maximal cliques of the
// complement are exactly the maximal independent sets.
struct MisEnumerator {
  const Graph& g;
  std::vector<VertexSet> out;

  // Vertices of `from` that are non-adjacent to v (v itself excluded).
  VertexSet non_neighbors(const VertexSet& from, Vertex v) const {
    VertexSet s = from - g.neighbors(v);
    s.erase(v);
    return s;
  }

  void expand(VertexSet& chosen, VertexSet candidates, VertexSet excluded) {
    if (candidates.empty()) {
      if (excluded.empty()) out.push_back(chosen);
      return;
    }
    // Pivot maximizing |candidates \ N(u)|, i.e. the fewest branches.
    VertexSet pool = candidates | excluded;
    Vertex pivot = pool.first();
    std::size_t best = 0;
    for (Vertex u = pool.first(); u < g.order(); u = pool.next(u)) {
      std::size_t c = non_neighbors(candidates, u).size();
      if (c >= best) {
        best = c;
        pivot = u;
      }
    }
    // Branch on candidates adjacent to the pivot (plus the pivot itself).
    VertexSet branch = candidates - non_neighbors(candidates, pivot);
    for (Vertex v = branch.first(); v < g.order(); v = branch.next(v)) {
      chosen.insert(v);
      expand(chosen, non_neighbors(candidates, v), non_neighbors(excluded, v));
      chosen.erase(v);
      candidates.erase(v);
      excluded.insert(v);
    }
  }
};

bool meets_all(const VertexSet& s, const std::vector<Demand>& demands) {
  return std::all_of(demands.begin(), demands.end(), [&](const Demand& d) { return s.intersects(d.hitset); });
}

bool better(Weight w, const VertexSet& s, Weight best_w, const VertexSet& best_s) {
  return w < best_w || (w == best_w && set_precedes(s, best_s));
}

}  // namespace

std::vector<VertexSet> enumerate_mis(const Graph& g, OracleLimits limits) {
  check_limit(g, limits);
  MisEnumerator e{g, {}};
  VertexSet chosen(g.order());
  e.expand(chosen, g.vertices(), VertexSet(g.order()));
  for (const auto& s : e.out)
    if (!is_maximal_independent(g, s)) throw std::logic_error("MIS enumeration produced a non-maximal set");
  std::sort(e.out.begin(), e.out.end(), [](const VertexSet& a, const VertexSet& b) { return set_precedes(a, b); });
  return e.out;
}

std::optional<OracleReport> oracle_constrained(const WeightedGraph& g, const std::vector<Demand>& demands,
                                               OracleLimits limits) {
  for (const auto& d : demands)
    if (d.hitset.universe() != g.order()) throw GraphError("demand hitset universe does not match graph order");
  auto all = enumerate_mis(g.graph(), limits);
  std::optional<OracleReport> best;
  for (const auto& s : all) {
    if (!meets_all(s, demands)) continue;
    Weight w = g.weight_of(s);
    if (!best || better(w, s, best->value, best->witness)) best = OracleReport{w, s, 0};
  }
  if (best) best->enumeration_size = all.size();
  return best;
}

OracleReport oracle_wid(const WeightedGraph& g, OracleLimits limits) {
  // Every graph has at least one maximal independent set (the empty graph has {}).
  return *oracle_constrained(g, {}, limits);
}

OracleReport oracle_id(const Graph& g, OracleLimits limits) { return oracle_wid(WeightedGraph::unit(g), limits); }

OracleReport oracle_min_dominating(const Graph& g, OracleLimits limits) {
  check_limit(g, limits);
  std::size_t n = g.order();
  std::vector<Vertex> pick;
  std::size_t examined = 0;
  // Lexicographic k-combinations for k = 0, 1, ..., n.
  for (std::size_t k = 0; k <= n; ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);
    while (true) {
      ++examined;
      VertexSet s(n, std::span<const Vertex>(pick));
      if (is_dominating(g, s)) return OracleReport{static_cast<Weight>(k), s, examined};
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("unreachable: V always dominates");
}

}  // namespace idom
