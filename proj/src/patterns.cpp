#include "idom/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace idom {

namespace {

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, e);
}

Graph from_one_based(std::size_t n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> e;
  for (auto [a, b] : pairs) e.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
  return Graph::from_edges(n, e);
}

struct FixedMatcher {
  const Graph& host;
  const Graph& pat;
  const std::function<bool(const Occurrence&)>& visit;
  PatternId id;
  std::vector<Vertex> image;
  VertexSet used;
  bool stopped = false;

  void run() {
    image.assign(pat.order(), 0);
    used = VertexSet(host.order());
    if (pat.order() <= host.order()) extend(0);
  }

  void extend(std::size_t i) {
    if (i == pat.order()) {
      if (!visit(Occurrence{id, image})) stopped = true;
      return;
    }
    VertexSet cand = used.complement();
    for (std::size_t j = 0; j < i; ++j) {
      if (pat.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)))
        cand &= host.neighbors(image[j]);
      else
        cand -= host.neighbors(image[j]);
    }
    std::size_t need = pat.degree(static_cast<Vertex>(i));
    for (Vertex u = cand.first(); u < host.order(); u = cand.next(u)) {
      if (host.degree(u) < need) continue;
      image[i] = u;
      used.insert(u);
      extend(i + 1);
      used.erase(u);
      if (stopped) return;
    }
  }
};

// Induced cycles of length >= k whose smallest vertex is the DFS root.
struct CycleSearch {
  const Graph& g;
  std::size_t k;
  std::vector<Vertex> path;

  bool dfs(Vertex root) {
    Vertex last = path.back();
    const VertexSet& nb = g.neighbors(last);
    for (Vertex u = nb.next(root); u < g.order(); u = nb.next(u)) {
      if (std::find(path.begin(), path.end(), u) != path.end()) continue;
      bool touches_root = path.size() >= 2 && g.adjacent(u, root);
      // Adjacency to an interior path vertex is a chord.
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (g.adjacent(u, path[i])) {
          chord = true;
          break;
        }
      if (chord) continue;
      if (touches_root) {
        if (path.size() + 1 >= k) {
          path.push_back(u);
          return true;
        }
        continue;
      }
      path.push_back(u);
      if (dfs(root)) return true;
      path.pop_back();
    }
    return false;
  }

  std::optional<std::vector<Vertex>> run() {
    for (Vertex s = 0; s < g.order(); ++s) {
      path.assign(1, s);
      if (dfs(s)) return path;
    }
    return std::nullopt;
  }
};

}  // namespace

std::string pattern_name(PatternId p) {
  switch (p.kind) {
    case PatternKind::P5: return "P5";
    case PatternKind::CoP5: return "CO_P5";
    case PatternKind::C3: return "C3";
    case PatternKind::C4: return "C4";
    case PatternKind::C5: return "C5";
    case PatternKind::C6: return "C6";
    case PatternKind::Domino: return "DOMINO";
    case PatternKind::Sun3: return "SUN3";
    case PatternKind::CycleAtLeast: return "CYCLE_GE" + std::to_string(p.min_length);
  }
  return "?";
}

PatternId parse_pattern(std::string_view name) {
  std::string up(name);
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
  static const std::vector<PatternId> fixed = {kP5, kCoP5, kC3, kC4, kC5, kC6, kDomino, kSun3};
  for (auto p : fixed)
    if (pattern_name(p) == up) return p;
  if (up == "COP5") return kCoP5;
  const std::string prefix = "CYCLE_GE";
  if (up.rfind(prefix, 0) == 0 && up.size() > prefix.size()) {
    std::size_t k = std::stoul(up.substr(prefix.size()));
    return PatternId::cycle_at_least(k);
  }
  throw std::invalid_argument("unknown pattern '" + std::string(name) + "'");
}

const Graph& pattern_graph(PatternId p) {
  static const Graph p5 = path_graph(5);
  static const Graph cop5 = complement(p5);
  static const Graph c3 = cycle_graph(3);
  static const Graph c4 = cycle_graph(4);
  static const Graph c5 = cycle_graph(5);
  static const Graph c6 = cycle_graph(6);
  static const Graph domino = from_one_based(6, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 6}, {5, 6}});
  static const Graph sun3 =
      from_one_based(6, {{1, 2}, {1, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 6}, {2, 3}, {3, 5}, {3, 6}});
  switch (p.kind) {
    case PatternKind::P5: return p5;
    case PatternKind::CoP5: return cop5;
    case PatternKind::C3: return c3;
    case PatternKind::C4: return c4;
    case PatternKind::C5: return c5;
    case PatternKind::C6: return c6;
    case PatternKind::Domino: return domino;
    case PatternKind::Sun3: return sun3;
    case PatternKind::CycleAtLeast: break;
  }
  throw std::invalid_argument("CYCLE_GE has no fixed pattern graph");
}

void for_each_induced(const Graph& g, PatternId p, const std::function<bool(const Occurrence&)>& visit) {
  FixedMatcher m{g, pattern_graph(p), visit, p, {}, {}};
  m.run();
}

std::optional<Occurrence> find_induced(const Graph& g, PatternId p) {
  if (p.kind == PatternKind::CycleAtLeast) {
    CycleSearch search{g, std::max<std::size_t>(p.min_length, 3), {}};
    if (auto cyc = search.run()) return Occurrence{p, *cyc};
    return std::nullopt;
  }
  std::optional<Occurrence> found;
  for_each_induced(g, p, [&](const Occurrence& occ) {
    found = occ;
    return false;
  });
  return found;
}

bool is_free(const Graph& g, const std::vector<PatternId>& patterns) {
  return std::none_of(patterns.begin(), patterns.end(), [&](PatternId p) { return find_induced(g, p).has_value(); });
}

bool verify_occurrence(const Graph& g, const Occurrence& occ) {
  const auto& vs = occ.vertices;
  for (Vertex v : vs)
    if (v >= g.order()) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j]) return false;
  if (occ.pattern.kind == PatternKind::CycleAtLeast) {
    std::size_t len = vs.size();
    if (len < std::max<std::size_t>(occ.pattern.min_length, 3)) return false;
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = i + 1; j < len; ++j) {
        bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
        if (g.adjacent(vs[i], vs[j]) != consecutive) return false;
      }
    return true;
  }
  const Graph& pat = pattern_graph(occ.pattern);
  if (vs.size() != pat.order()) return false;
  for (Vertex i = 0; i < pat.order(); ++i)
    for (Vertex j = i + 1; j < pat.order(); ++j)
      if (g.adjacent(vs[i], vs[j]) != pat.adjacent(i, j)) return false;
  return true;
}

bool is_antisimplicial(const Graph& g, Vertex v) { return edges_within(g, antineighborhood(g, v)) == 0; }

std::optional<Vertex> find_antisimplicial(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (is_antisimplicial(g, v)) return v;
  return std::nullopt;
}

bool is_c5(const Graph& g) {
  if (g.order() != 5 || g.edge_count() != 5) return false;
  for (Vertex v = 0; v < 5; ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

}  // namespace idom
