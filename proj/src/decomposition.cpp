#include "idom/decomposition.hpp"

#include <algorithm>
#include <set>

namespace idom {

namespace {

std::string describe_failure(const Graph& g, const std::optional<Occurrence>& witness) {
  std::string msg = "no good vertex in a prime " + std::to_string(g.order()) + "-vertex subgraph";
  if (witness) {
    msg += "; contains " + pattern_name(witness->pattern) + " on";
    for (Vertex v : witness->vertices) msg += " " + std::to_string(v);
  }
  return msg;
}

std::vector<Vertex> compose(const std::vector<Vertex>& inner, const std::vector<Vertex>& outer) {
  std::vector<Vertex> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

struct TreeBuilder {
  DecompTree tree;

  std::size_t add(Graph g, std::vector<Vertex> to_root, std::vector<Vertex> to_parent) {
    std::size_t idx = tree.nodes.size();
    DecompNode node;
    node.graph = std::move(g);
    node.to_root = std::move(to_root);
    node.to_parent = std::move(to_parent);
    tree.nodes.push_back(std::move(node));
    expand(idx);
    return idx;
  }

  void attach(std::size_t parent, const Subgraph& child) {
    auto to_root = compose(child.to_host, tree.nodes[parent].to_root);
    std::size_t idx = add(child.graph, std::move(to_root), child.to_host);
    tree.nodes[parent].children.push_back(idx);
  }

  void expand(std::size_t idx) {
    // Copy what we need: `tree.nodes` may reallocate while children are added.
    const Graph g = tree.nodes[idx].graph;
    const auto to_root = tree.nodes[idx].to_root;
    if (g.edge_count() <= 1) {
      tree.nodes[idx].kind = NodeKind::LeafF;
      return;
    }
    if (is_complete(g)) {
      tree.nodes[idx].kind = NodeKind::LeafComplete;
      return;
    }
    if (auto m = find_homogeneous_set(g)) {
      Vertex h = m->first();
      Vertex a = m->next(h);
      Vertex b = m->complement().first();
      auto& node = tree.nodes[idx];
      node.kind = NodeKind::Homogeneous;
      node.module = *m;
      node.representative = h;
      node.label = std::make_pair(to_root[a], to_root[b]);
      VertexSet outer = m->complement();
      outer.insert(h);
      Subgraph inner_sub = induced_subgraph(g, *m);
      Subgraph outer_sub = induced_subgraph(g, outer);
      attach(idx, inner_sub);
      attach(idx, outer_sub);
      return;
    }
    Vertex v;
    try {
      v = find_good_vertex(g);
    } catch (const NotInClass& e) {
      throw NotInClass(g, to_root, e.witness());
    }
    auto& node = tree.nodes[idx];
    node.kind = NodeKind::Antineighborhood;
    node.branch_vertex = v;
    node.label = std::make_pair(to_root[v], to_root[g.neighbors(v).first()]);
    Subgraph leaf = induced_subgraph(g, antineighborhood(g, v));
    Subgraph rest = remove_vertex(g, v);
    attach(idx, leaf);
    attach(idx, rest);
  }
};

}  // namespace

NotInClass::NotInClass(Graph subgraph, std::vector<Vertex> to_root, std::optional<Occurrence> witness)
    : std::runtime_error(describe_failure(subgraph, witness)),
      subgraph_(std::move(subgraph)),
      to_root_(std::move(to_root)),
      witness_(std::move(witness)) {}

bool is_module(const Graph& g, const VertexSet& m) {
  VertexSet outside = m.complement();
  for (Vertex z = outside.first(); z < g.order(); z = outside.next(z)) {
    VertexSet seen = g.neighbors(z) & m;
    if (!seen.empty() && seen != m) return false;
  }
  return true;
}

VertexSet module_closure(const Graph& g, Vertex x, Vertex y) {
  VertexSet m(g.order());
  m.insert(x);
  m.insert(y);
  bool grew = true;
  while (grew) {
    grew = false;
    VertexSet outside = m.complement();
    for (Vertex z = outside.first(); z < g.order(); z = outside.next(z)) {
      VertexSet seen = g.neighbors(z) & m;
      if (!seen.empty() && seen != m) {
        m.insert(z);
        grew = true;
      }
    }
  }
  return m;
}

std::optional<VertexSet> find_homogeneous_set(const Graph& g) {
  std::size_t n = g.order();
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      VertexSet m = module_closure(g, x, y);
      if (m.size() < n) {
        if (!is_module(g, m)) throw std::logic_error("module closure returned a non-module");
        return m;
      }
    }
  return std::nullopt;
}

bool is_prime(const Graph& g) { return !find_homogeneous_set(g).has_value(); }

Vertex find_good_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (edges_within(g, antineighborhood(g, v)) <= 1) return v;
  std::optional<Occurrence> witness = find_induced(g, kP5);
  if (!witness) witness = find_induced(g, kCoP5);
  std::vector<Vertex> ids(g.order());
  for (Vertex v = 0; v < g.order(); ++v) ids[v] = v;
  throw NotInClass(g, std::move(ids), std::move(witness));
}

std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::LeafComplete: return "leaf_complete";
    case NodeKind::LeafF: return "leaf_f";
    case NodeKind::Homogeneous: return "homogeneous";
    case NodeKind::Antineighborhood: return "antineighborhood";
  }
  return "?";
}

std::size_t DecompTree::internal_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const DecompNode& n) { return !n.is_leaf(); }));
}

DecompTree build_tree(const Graph& g) {
  TreeBuilder b;
  b.tree.root_order = g.order();
  std::vector<Vertex> ids(g.order());
  for (Vertex v = 0; v < g.order(); ++v) ids[v] = v;
  b.add(g, std::move(ids), {});
  return std::move(b.tree);
}

bool labels_distinct(const DecompTree& t) {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& node : t.nodes)
    if (node.label && !seen.insert(*node.label).second) return false;
  std::size_t n = t.root_order;
  return t.internal_count() <= n * (n == 0 ? 0 : n - 1);
}

}  // namespace idom
