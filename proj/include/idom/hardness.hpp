#pragma once

#include <array>
#include <string>
#include <vector>

#include "idom/graph.hpp"
#include "idom/oracle.hpp"
#include "idom/satgraph.hpp"

namespace idom {

/// The three-layer weighted instance built from a source graph. Source vertex
/// v becomes v1 -- v2 -- v3; the v3 layer is a clique and each source edge
/// (w, v) adds the cross edges (w2, v3) and (w3, v2).
struct WidReduction {
  Graph source;
  WeightedGraph target;
  /// layer_map[v] = {v1, v2, v3} as target ids.
  std::vector<std::array<Vertex, 3>> layer_map;
  SatPartition claimed_partition;
};

/// Target ids: v1 = 3v, v2 = 3v + 1, v3 = 3v + 2. Weights 1, 2 and 2n.
WidReduction build_wid_reduction(const Graph& source);

struct ReductionClassReport {
  bool sat_partition_ok = false;
  std::string sat_detail;
  bool c4_free = false;
  /// Source is (C3, C4, C5, C6)-free, the premise under which Sun3-freeness is guaranteed.
  bool source_in_class = false;
  bool sun3_free = false;
  bool ok() const { return sat_partition_ok && c4_free && (!source_in_class || sun3_free); }
};

ReductionClassReport check_reduction_class(const WidReduction& r);

struct EquivalenceReport {
  Weight gamma_dom = 0;
  Weight idw_target = 0;
  bool equal = false;
};

/// Brute-forces the domination number of the source and the minimum-weight
/// independent dominating set of the target. Throws OracleLimitExceeded when
/// the source has more than `max_source_vertices` vertices.
EquivalenceReport check_reduction_equivalence(const Graph& source, std::size_t max_source_vertices = 10);

/// {v2 : v in D} together with {v1 : v not in D}.
VertexSet dominating_to_target(const WidReduction& r, const VertexSet& dominating);
/// {v : v2 is chosen}.
VertexSet target_to_dominating(const WidReduction& r, const VertexSet& target_set);

}  // namespace idom
