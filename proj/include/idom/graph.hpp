#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "idom/vertex_set.hpp"

namespace idom {

using Edge = std::pair<Vertex, Vertex>;
using Weight = std::int64_t;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1 with bitset adjacency.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on self-loops or out-of-range endpoints. Duplicate
  /// edges (in either orientation) are merged.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  /// Sorted (u < v) edge list.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
};

class WeightedGraph {
 public:
  WeightedGraph() = default;
  /// Throws GraphError when the weight count differs from the order or a weight is negative.
  WeightedGraph(Graph g, std::vector<Weight> weights);

  static WeightedGraph unit(Graph g) {
    std::vector<Weight> w(g.order(), 1);
    return WeightedGraph(std::move(g), std::move(w));
  }

  const Graph& graph() const { return graph_; }
  const std::vector<Weight>& weights() const { return weights_; }
  Weight weight(Vertex v) const { return weights_[v]; }
  Weight weight_of(const VertexSet& s) const;
  std::size_t order() const { return graph_.order(); }

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  Graph graph_;
  std::vector<Weight> weights_;
};

/// An induced subgraph together with the ids its vertices had in the host.
/// `to_host[i]` is the host id of new vertex i; ids keep their relative order.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_host;
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);
Subgraph remove_vertices(const Graph& g, const VertexSet& drop);
Subgraph remove_vertex(const Graph& g, Vertex v);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);

VertexSet neighborhood(const Graph& g, Vertex v);
/// V \ N(v); always contains v.
VertexSet antineighborhood(const Graph& g, Vertex v);

bool is_complete(const Graph& g);
bool is_edgeless(const Graph& g);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const VertexSet& s);
bool is_maximal_independent(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);

/// Number of edges with both endpoints in s.
std::size_t edges_within(const Graph& g, const VertexSet& s);

/// Maps a set through `to_host` into a universe of size `host_order`.
VertexSet lift(const VertexSet& s, const std::vector<Vertex>& to_host, std::size_t host_order);

std::string to_string(const VertexSet& s);

}  // namespace idom
