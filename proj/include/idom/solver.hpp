#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "idom/decomposition.hpp"
#include "idom/demand.hpp"
#include "idom/graph.hpp"

namespace idom {

/// A maximal independent set of the instance in root ids, or Infeasible.
/// Feasible solutions order lexicographically by (forbidden_used, weight).
struct Solution {
  bool feasible = false;
  VertexSet vertices;
  std::int64_t forbidden_used = 0;
  Weight weight = 0;

  static Solution infeasible() { return {}; }
};

/// Instrumentation for one solver invocation.
struct SolverStats {
  std::size_t calls = 0;
  std::size_t memo_hits = 0;
  std::size_t max_demands = 0;
  std::size_t max_mixed = 0;
  std::size_t tree_nodes = 0;
};

/// Minimum-weight maximal independent set. Exact on (P5, co-P5)-free graphs;
/// throws NotInClass for inputs where decomposition finds no good vertex.
/// Among optima the witness is the smallest set in sorted-id order.
Solution solve_wid(const WeightedGraph& g, SolverStats* stats = nullptr);

/// Minimum-weight maximal independent set meeting every demand hitset, or
/// Infeasible. Vertices in `forbidden` may still be used, but solutions are
/// ranked first by how many of them they contain.
Solution solve_constrained(const WeightedGraph& g, const std::vector<Demand>& demands,
                           const VertexSet& forbidden, SolverStats* stats = nullptr);
Solution solve_constrained(const WeightedGraph& g, const std::vector<Demand>& demands, SolverStats* stats = nullptr);

Solution solve_id(const Graph& g, SolverStats* stats = nullptr);

/// Result of the demand-free recursion that applies id_w(G) = min{id_w(G-N(v)), id_w(G-v)}
/// literally at antineighbourhood nodes. `witness` is the set assembled along
/// the way, with v added whenever the G-v witness leaves v undominated.
struct NaiveResult {
  Weight value = 0;
  VertexSet witness;
  Weight witness_weight = 0;
  bool witness_is_mis = false;
};

struct NaiveOptions {
  /// Branch vertex to use at the root instead of the decomposition's choice.
  /// The root must be prime and non-leaf, and G-N(v) may have at most one edge.
  std::optional<Vertex> root_branch_vertex;
};

NaiveResult solve_naive_eq1(const WeightedGraph& g, NaiveOptions options = {});

/// The two terms of the antineighbourhood minimum at v, each solved exactly.
struct TwoTermValue {
  Weight antineighborhood_term = 0;  // id_w(G - N(v))
  Weight deletion_term = 0;          // id_w(G - v)
  Weight value() const { return antineighborhood_term < deletion_term ? antineighborhood_term : deletion_term; }
};

TwoTermValue eq1_two_term(const WeightedGraph& g, Vertex v);

WeightedGraph induced_weighted(const WeightedGraph& g, const Subgraph& sub);

}  // namespace idom
