#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idom/graph.hpp"

namespace idom {

/// A candidate sat-partition (A, B). `b_edges` lists the edges inside B; for a
/// valid partition they form a perfect matching of B and s() is their count.
struct SatPartition {
  VertexSet a;
  VertexSet b;
  std::vector<Edge> b_edges;

  static SatPartition make(const Graph& g, VertexSet a, VertexSet b);
  std::size_t s() const { return b_edges.size(); }
};

enum class SatViolation { None, NotPartition, ANotClique, BNotMatching, Triangle };

struct SatVerdict {
  SatViolation violation = SatViolation::None;
  std::string detail;
  bool ok() const { return violation == SatViolation::None; }
};

std::string to_string(SatViolation v);

/// Checks the four partition conditions in order and names the first failure
/// with a witness.
SatVerdict verify_sat_partition(const Graph& g, const VertexSet& a, const VertexSet& b);

class SatSearchLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive search over cliques A (in DFS order, smallest ids first).
/// Throws SatSearchLimitExceeded when the graph has more than `max_vertices` vertices.
std::optional<SatPartition> find_sat_partition(const Graph& g, std::size_t max_vertices = 20);

/// Bookkeeping for vertices and edges introduced by the gamma transformation.
struct TransformMarkers {
  VertexSet alpha_new;
  VertexSet beta_new;
  std::vector<Edge> beta_new_edges;

  static TransformMarkers empty(std::size_t n) { return {VertexSet(n), VertexSet(n), {}}; }
};

struct GammaResult {
  Graph graph;
  SatPartition partition;
  TransformMarkers markers;
  /// Ids of the added vertices; old vertices keep their ids.
  Vertex v = 0, x = 0, y = 0;
};

/// Replaces the A-B edge (a, b) by a new clique vertex v and a new B-edge (x, y):
/// v joins all of A, edge (a, b) is removed, and (v, b), (v, x), (a, y) are added.
/// `markers` accumulates across repeated applications. Throws std::invalid_argument
/// unless a is in A, b is in B and the two are adjacent.
GammaResult gamma_transform(const Graph& g, const SatPartition& p, Vertex a, Vertex b,
                            const TransformMarkers& markers);
GammaResult gamma_transform(const Graph& g, const SatPartition& p, Vertex a, Vertex b);

struct StarResult {
  Graph graph;
  SatPartition partition;
  TransformMarkers markers;
  /// The original A-B edges, in the order they were transformed.
  std::vector<Edge> transformed;
};

/// Applies gamma once to every A-B edge of the input, in lexicographic (a, b) order.
/// Edges created along the way are never transformed.
StarResult star_transform(const Graph& g, const SatPartition& p);

/// First domino or Sun3 occurrence whose labelled vertices sit on the wrong side
/// of the partition, described as text; none when every occurrence complies.
std::optional<std::string> check_obs1(const Graph& g, const SatPartition& p);

struct GStarVerdict {
  int failed_property = 0;  // 0 when all hold, otherwise 1, 2 or 3
  std::string detail;
  bool ok() const { return failed_property == 0; }
};

GStarVerdict check_gstar_properties(const Graph& g, const SatPartition& p, const TransformMarkers& markers);

}  // namespace idom
