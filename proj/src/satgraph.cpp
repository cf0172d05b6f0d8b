#include "idom/satgraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "idom/patterns.hpp"

namespace idom {

namespace {

std::string edge_str(Vertex u, Vertex v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

bool has_edge(const std::vector<Edge>& edges, Vertex u, Vertex v) {
  return std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
    return (e.first == u && e.second == v) || (e.first == v && e.second == u);
  });
}

struct CliqueSearch {
  const Graph& g;
  std::optional<SatPartition> found;

  bool complete(const VertexSet& a) {
    VertexSet b = a.complement();
    if (verify_sat_partition(g, a, b).ok()) {
      found = SatPartition::make(g, a, b);
      return true;
    }
    return false;
  }

  bool dfs(VertexSet& a, const VertexSet& candidates) {
    if (complete(a)) return true;
    for (Vertex v = candidates.first(); v < g.order(); v = candidates.next(v)) {
      a.insert(v);
      VertexSet next = candidates & g.neighbors(v);
      // Only extend with larger ids so each clique is visited once.
      for (Vertex u = next.first(); u < g.order() && u < v; u = next.next(u)) next.erase(u);
      if (dfs(a, next)) return true;
      a.erase(v);
    }
    return false;
  }
};

}  // namespace

SatPartition SatPartition::make(const Graph& g, VertexSet a, VertexSet b) {
  SatPartition p{std::move(a), std::move(b), {}};
  for (auto [u, v] : g.edges())
    if (p.b.contains(u) && p.b.contains(v)) p.b_edges.emplace_back(u, v);
  return p;
}

std::string to_string(SatViolation v) {
  switch (v) {
    case SatViolation::None: return "ok";
    case SatViolation::NotPartition: return "not a partition";
    case SatViolation::ANotClique: return "A is not a clique";
    case SatViolation::BNotMatching: return "B does not induce a perfect matching";
    case SatViolation::Triangle: return "triangle (a,b,b')";
  }
  return "?";
}

SatVerdict verify_sat_partition(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::size_t n = g.order();
  if (a.universe() != n || b.universe() != n || a.intersects(b) || (a | b).size() != n) {
    std::string why = a.universe() != n || b.universe() != n ? "universe mismatch"
                      : a.intersects(b)                     ? "A and B overlap in " + to_string(a & b)
                                                            : "uncovered vertices " + to_string((a | b).complement());
    return {SatViolation::NotPartition, why};
  }
  for (Vertex u = a.first(); u < n; u = a.next(u)) {
    VertexSet missing = a - g.neighbors(u);
    missing.erase(u);
    if (!missing.empty())
      return {SatViolation::ANotClique, "non-edge " + edge_str(u, missing.first()) + " inside A"};
  }
  for (Vertex u = b.first(); u < n; u = b.next(u)) {
    std::size_t d = (g.neighbors(u) & b).size();
    if (d != 1)
      return {SatViolation::BNotMatching, "vertex " + std::to_string(u) + " has " + std::to_string(d) + " neighbours in B"};
  }
  for (Vertex u = b.first(); u < n; u = b.next(u)) {
    Vertex partner = (g.neighbors(u) & b).first();
    if (partner < u) continue;
    VertexSet common = g.neighbors(u) & g.neighbors(partner) & a;
    if (!common.empty())
      return {SatViolation::Triangle,
              "A-vertex " + std::to_string(common.first()) + " adjacent to both ends of " + edge_str(u, partner)};
  }
  return {};
}

std::optional<SatPartition> find_sat_partition(const Graph& g, std::size_t max_vertices) {
  if (g.order() > max_vertices)
    throw SatSearchLimitExceeded("sat-partition search bound exceeded: n=" + std::to_string(g.order()) + " > " +
                                 std::to_string(max_vertices));
  CliqueSearch search{g, std::nullopt};
  VertexSet a(g.order());
  search.dfs(a, g.vertices());
  return search.found;
}

GammaResult gamma_transform(const Graph& g, const SatPartition& p, Vertex a, Vertex b,
                            const TransformMarkers& markers) {
  std::size_t n = g.order();
  if (a >= n || b >= n || !p.a.contains(a) || !p.b.contains(b))
    throw std::invalid_argument("gamma requires a in A and b in B");
  if (!g.adjacent(a, b)) throw std::invalid_argument("gamma requires (a,b) to be an edge");

  GammaResult r;
  r.v = static_cast<Vertex>(n);
  r.x = static_cast<Vertex>(n + 1);
  r.y = static_cast<Vertex>(n + 2);

  std::vector<Edge> edges;
  for (auto e : g.edges())
    if (!((e.first == a && e.second == b) || (e.first == b && e.second == a))) edges.push_back(e);
  for (Vertex u = p.a.first(); u < n; u = p.a.next(u)) edges.emplace_back(u, r.v);
  edges.emplace_back(r.x, r.y);
  edges.emplace_back(b, r.v);
  edges.emplace_back(r.v, r.x);
  edges.emplace_back(a, r.y);
  r.graph = Graph::from_edges(n + 3, edges);

  VertexSet new_a = p.a.widened(n + 3);
  new_a.insert(r.v);
  VertexSet new_b = p.b.widened(n + 3);
  new_b.insert(r.x);
  new_b.insert(r.y);
  r.partition = SatPartition::make(r.graph, std::move(new_a), std::move(new_b));

  r.markers.alpha_new = markers.alpha_new.widened(n + 3);
  r.markers.alpha_new.insert(r.v);
  r.markers.beta_new = markers.beta_new.widened(n + 3);
  r.markers.beta_new.insert(r.x);
  r.markers.beta_new.insert(r.y);
  r.markers.beta_new_edges = markers.beta_new_edges;
  r.markers.beta_new_edges.emplace_back(r.x, r.y);
  return r;
}

GammaResult gamma_transform(const Graph& g, const SatPartition& p, Vertex a, Vertex b) {
  return gamma_transform(g, p, a, b, TransformMarkers::empty(g.order()));
}

StarResult star_transform(const Graph& g, const SatPartition& p) {
  auto verdict = verify_sat_partition(g, p.a, p.b);
  if (!verdict.ok()) throw std::invalid_argument("star_transform: invalid sat-partition: " + verdict.detail);

  StarResult r{g, p, TransformMarkers::empty(g.order()), {}};
  for (auto [u, v] : g.edges()) {
    if (p.a.contains(u) && p.b.contains(v))
      r.transformed.emplace_back(u, v);
    else if (p.b.contains(u) && p.a.contains(v))
      r.transformed.emplace_back(v, u);
  }
  std::sort(r.transformed.begin(), r.transformed.end());
  for (auto [a, b] : r.transformed) {
    auto step = gamma_transform(r.graph, r.partition, a, b, r.markers);
    r.graph = std::move(step.graph);
    r.partition = std::move(step.partition);
    r.markers = std::move(step.markers);
  }
  return r;
}

std::optional<std::string> check_obs1(const Graph& g, const SatPartition& p) {
  auto verdict = verify_sat_partition(g, p.a, p.b);
  if (!verdict.ok()) throw std::invalid_argument("check_obs1: invalid sat-partition: " + verdict.detail);

  // Pattern positions (0-based figure labels) that must lie in A; the rest lie in B.
  struct Rule {
    PatternId pattern;
    std::vector<std::size_t> in_a;
  };
  const Rule rules[] = {{kDomino, {2, 3}}, {kSun3, {0, 1, 2}}};

  std::optional<std::string> failure;
  for (const auto& rule : rules) {
    for_each_induced(g, rule.pattern, [&](const Occurrence& occ) {
      for (std::size_t i = 0; i < occ.vertices.size(); ++i) {
        bool want_a = std::find(rule.in_a.begin(), rule.in_a.end(), i) != rule.in_a.end();
        if (p.a.contains(occ.vertices[i]) != want_a) {
          failure = pattern_name(rule.pattern) + " label " + std::to_string(i + 1) + " at vertex " +
                    std::to_string(occ.vertices[i]) + " should be in " + (want_a ? "A" : "B");
          return false;
        }
      }
      return true;
    });
    if (failure) return failure;
  }
  return std::nullopt;
}

GStarVerdict check_gstar_properties(const Graph& g, const SatPartition& p, const TransformMarkers& markers) {
  std::size_t n = g.order();
  VertexSet alpha_old = p.a - markers.alpha_new;
  std::vector<Edge> beta_old_edges;
  for (auto e : p.b_edges)
    if (!has_edge(markers.beta_new_edges, e.first, e.second)) beta_old_edges.push_back(e);

  auto touches = [&](Vertex u, const Edge& e) { return g.adjacent(u, e.first) || g.adjacent(u, e.second); };

  for (Vertex u = alpha_old.first(); u < n; u = alpha_old.next(u))
    for (const auto& e : beta_old_edges)
      if (touches(u, e))
        return {1, "alpha-old vertex " + std::to_string(u) + " is adjacent to beta-old edge " +
                       edge_str(e.first, e.second)};

  for (Vertex u = markers.alpha_new.first(); u < n; u = markers.alpha_new.next(u)) {
    auto count_new = std::count_if(markers.beta_new_edges.begin(), markers.beta_new_edges.end(),
                                   [&](const Edge& e) { return touches(u, e); });
    auto count_old =
        std::count_if(beta_old_edges.begin(), beta_old_edges.end(), [&](const Edge& e) { return touches(u, e); });
    if (count_new != 1 || count_old != 1)
      return {2, "alpha-new vertex " + std::to_string(u) + " touches " + std::to_string(count_new) +
                     " beta-new and " + std::to_string(count_old) + " beta-old edges"};
  }

  for (const auto& e : markers.beta_new_edges) {
    VertexSet na = g.neighbors(e.first) & p.a;
    VertexSet nb = g.neighbors(e.second) & p.a;
    auto single_of = [&](const VertexSet& s, const VertexSet& kind) { return s.size() == 1 && kind.contains(s.first()); };
    bool ok = (single_of(na, markers.alpha_new) && single_of(nb, alpha_old)) ||
              (single_of(nb, markers.alpha_new) && single_of(na, alpha_old));
    if (!ok)
      return {3, "beta-new edge " + edge_str(e.first, e.second) + " has A-neighbourhoods " + to_string(na) + " and " +
                     to_string(nb)};
  }
  return {};
}

}  // namespace idom
