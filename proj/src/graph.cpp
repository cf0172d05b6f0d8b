#include "idom/graph.hpp"

#include <numeric>
#include <sstream>

namespace idom {

namespace {

void check_set(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw GraphError("vertex set universe " + std::to_string(s.universe()) + " does not match graph order " +
                     std::to_string(g.order()));
}

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g;
  g.adj_.assign(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                       std::to_string(n));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (!g.adj_[u].contains(v)) {
      g.adj_[u].insert(v);
      g.adj_[v].insert(u);
      ++g.edge_count_;
    }
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v = adj_[u].next(u); v < order(); v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

WeightedGraph::WeightedGraph(Graph g, std::vector<Weight> weights) : graph_(std::move(g)), weights_(std::move(weights)) {
  if (weights_.size() != graph_.order())
    throw GraphError("expected " + std::to_string(graph_.order()) + " weights, got " + std::to_string(weights_.size()));
  for (std::size_t v = 0; v < weights_.size(); ++v)
    if (weights_[v] < 0) throw GraphError("negative weight at vertex " + std::to_string(v));
}

Weight WeightedGraph::weight_of(const VertexSet& s) const {
  Weight total = 0;
  for (Vertex v = s.first(); v < s.universe(); v = s.next(v)) total += weights_[v];
  return total;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  check_set(g, keep);
  Subgraph out;
  out.to_host = keep.to_vector();
  std::vector<Vertex> to_new(g.order(), 0);
  for (std::size_t i = 0; i < out.to_host.size(); ++i) to_new[out.to_host[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.to_host.size(); ++i) {
    Vertex u = out.to_host[i];
    VertexSet nb = g.neighbors(u) & keep;
    for (Vertex v = nb.next(u); v < g.order(); v = nb.next(v)) edges.emplace_back(static_cast<Vertex>(i), to_new[v]);
  }
  out.graph = Graph::from_edges(out.to_host.size(), edges);
  return out;
}

Subgraph remove_vertices(const Graph& g, const VertexSet& drop) {
  check_set(g, drop);
  return induced_subgraph(g, drop.complement());
}

Subgraph remove_vertex(const Graph& g, Vertex v) {
  check_vertex(g, v);
  VertexSet drop(g.order());
  drop.insert(v);
  return remove_vertices(g, drop);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph::from_edges(g.order(), edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  auto edges = g.edges();
  auto shift = static_cast<Vertex>(g.order());
  for (auto [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(g.order() + h.order(), edges);
}

VertexSet neighborhood(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return g.neighbors(v);
}

VertexSet antineighborhood(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return g.neighbors(v).complement();
}

bool is_complete(const Graph& g) {
  std::size_t n = g.order();
  return g.edge_count() == n * (n == 0 ? 0 : n - 1) / 2;
}

bool is_edgeless(const Graph& g) { return g.edge_count() == 0; }

bool is_independent(const Graph& g, const VertexSet& s) {
  check_set(g, s);
  for (Vertex v = s.first(); v < g.order(); v = s.next(v))
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  check_set(g, s);
  VertexSet covered = s;
  for (Vertex v = s.first(); v < g.order(); v = s.next(v)) covered |= g.neighbors(v);
  return covered.size() == g.order();
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) { return is_independent(g, s) && is_dominating(g, s); }

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet seen(g.order());
  VertexSet frontier(g.order());
  frontier.insert(0);
  while (!frontier.empty()) {
    seen |= frontier;
    VertexSet next(g.order());
    for (Vertex v = frontier.first(); v < g.order(); v = frontier.next(v)) next |= g.neighbors(v);
    frontier = next - seen;
  }
  return seen.size() == g.order();
}

std::size_t edges_within(const Graph& g, const VertexSet& s) {
  std::size_t twice = 0;
  for (Vertex v = s.first(); v < g.order(); v = s.next(v)) twice += (g.neighbors(v) & s).size();
  return twice / 2;
}

VertexSet lift(const VertexSet& s, const std::vector<Vertex>& to_host, std::size_t host_order) {
  VertexSet out(host_order);
  for (Vertex v = s.first(); v < s.universe(); v = s.next(v)) out.insert(to_host[v]);
  return out;
}

std::string to_string(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Vertex v = s.first(); v < s.universe(); v = s.next(v)) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace idom
