#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "idom/graph.hpp"
#include "idom/patterns.hpp"

namespace idom {

/// Raised when a prime non-leaf graph has no good vertex, i.e. the input lies
/// outside the (P5, co-P5)-free class. Carries the offending subgraph in root ids.
class NotInClass : public std::runtime_error {
 public:
  NotInClass(Graph subgraph, std::vector<Vertex> to_root, std::optional<Occurrence> witness);

  const Graph& subgraph() const { return subgraph_; }
  const std::vector<Vertex>& to_root() const { return to_root_; }
  /// A P5 or co-P5 in the subgraph (local ids), when one exists.
  const std::optional<Occurrence>& witness() const { return witness_; }

 private:
  Graph subgraph_;
  std::vector<Vertex> to_root_;
  std::optional<Occurrence> witness_;
};

/// True iff every vertex outside `m` sees all of `m` or none of it.
bool is_module(const Graph& g, const VertexSet& m);

/// Smallest module containing both x and y.
VertexSet module_closure(const Graph& g, Vertex x, Vertex y);

/// A module M with 2 <= |M| < n: the closure of the first vertex pair (in
/// lexicographic order) whose closure is not all of V.
std::optional<VertexSet> find_homogeneous_set(const Graph& g);
bool is_prime(const Graph& g);

/// Smallest vertex whose antineighbourhood induces at most one edge. Throws
/// NotInClass when none exists.
Vertex find_good_vertex(const Graph& g);

enum class NodeKind { LeafComplete, LeafF, Homogeneous, Antineighborhood };
std::string to_string(NodeKind k);

struct DecompNode {
  NodeKind kind = NodeKind::LeafF;
  Graph graph;
  /// Local id -> root id, and local id -> parent-local id (empty at the root).
  std::vector<Vertex> to_root;
  std::vector<Vertex> to_parent;
  /// Homogeneous: the module (local ids) and its representative h.
  VertexSet module;
  Vertex representative = 0;
  /// Antineighborhood: the branch vertex (local id).
  Vertex branch_vertex = 0;
  /// Root-id label (a, b) of an internal node.
  std::optional<std::pair<Vertex, Vertex>> label;
  /// Indices into DecompTree::nodes. Homogeneous: {G[M], G[(V\M)+h]};
  /// antineighborhood: {G-N(v), G-v}.
  std::vector<std::size_t> children;

  bool is_leaf() const { return children.empty(); }
};

struct DecompTree {
  /// nodes[0] is the root; children always have larger indices than parents.
  std::vector<DecompNode> nodes;
  std::size_t root_order = 0;

  const DecompNode& root() const { return nodes.front(); }
  std::size_t node_count() const { return nodes.size(); }
  std::size_t internal_count() const;
};

/// Leaves: graphs with at most one edge (LeafF) and other complete graphs
/// (LeafComplete). Otherwise a homogeneous node with h = min M when a module
/// exists, else an antineighbourhood node at find_good_vertex.
DecompTree build_tree(const Graph& g);

/// Label distinctness and internal_count <= n(n-1).
bool labels_distinct(const DecompTree& t);

}  // namespace idom
