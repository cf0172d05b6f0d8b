#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "idom/demand.hpp"
#include "idom/graph.hpp"

namespace idom {

class OracleLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  std::size_t max_vertices = 25;
};

struct OracleReport {
  Weight value = 0;
  VertexSet witness;
  std::size_t enumeration_size = 0;
};

/// All maximal independent sets, sorted by `set_precedes`.
std::vector<VertexSet> enumerate_mis(const Graph& g, OracleLimits limits = {});

/// Minimum-weight maximal independent set; ties go to the `set_precedes`-smallest.
OracleReport oracle_wid(const WeightedGraph& g, OracleLimits limits = {});
OracleReport oracle_id(const Graph& g, OracleLimits limits = {});
/// As oracle_wid, restricted to sets meeting every demand hitset; none when no
/// maximal independent set qualifies.
std::optional<OracleReport> oracle_constrained(const WeightedGraph& g, const std::vector<Demand>& demands,
                                               OracleLimits limits = {});

/// Minimum-cardinality dominating set by subset enumeration in increasing size.
OracleReport oracle_min_dominating(const Graph& g, OracleLimits limits = {});

}  // namespace idom
