#include "idom/generators.hpp"

#include <algorithm>
#include <cctype>

#include "idom/decomposition.hpp"

namespace idom {

namespace {

const std::vector<PatternId> kP5Pair = {kP5, kCoP5};

std::size_t parse_size(std::string_view digits, std::string_view whole) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw GenerationError("unknown graph name '" + std::string(whole) + "'");
  return std::stoul(std::string(digits));
}

}  // namespace

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw GenerationError("cycles need at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, e);
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph edgeless(std::size_t n) { return Graph::from_edges(n, {}); }

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

Graph named(std::string_view name) {
  std::string up(name);
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
  if (up == "DOMINO" || up == "SUN3") return pattern_graph(up == "DOMINO" ? kDomino : kSun3);
  // Path a1-u1-u2-a2 with the apex (4) on the triangle u1-u2-apex.
  if (up == "BULL") return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}});
  if (up == "K2_PLUS_K1") return Graph::from_edges(3, {{0, 1}});
  if (up.rfind("STAR", 0) == 0) return star(parse_size(std::string_view(up).substr(4), name));
  if (up.empty()) throw GenerationError("empty graph name");
  std::size_t n = parse_size(std::string_view(up).substr(1), name);
  switch (up[0]) {
    case 'P': return path(n);
    case 'C': return cycle(n);
    case 'K': return complete(n);
    case 'E': return edgeless(n);
    default: break;
  }
  throw GenerationError("unknown graph name '" + std::string(name) + "'");
}

Graph gnp(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

std::vector<Graph> gnp_filtered(std::size_t n, double p, const std::vector<PatternId>& forbidden,
                                std::uint64_t seed, std::size_t count, std::size_t budget) {
  Rng rng(seed);
  std::vector<Graph> out;
  std::size_t rejected = 0;
  while (out.size() < count) {
    Graph g = gnp(n, p, rng);
    if (is_free(g, forbidden)) {
      out.push_back(std::move(g));
    } else if (++rejected > budget) {
      throw GenerationError("rejection budget of " + std::to_string(budget) + " exhausted after " +
                            std::to_string(out.size()) + " of " + std::to_string(count) + " graphs");
    }
  }
  return out;
}

SatInstance sat_random(std::size_t size_a, std::size_t match_b, double p_ab, std::uint64_t seed) {
  Rng rng(seed);
  std::size_t n = size_a + 2 * match_b;
  std::vector<Edge> e;
  for (Vertex i = 0; i < size_a; ++i)
    for (Vertex j = i + 1; j < size_a; ++j) e.emplace_back(i, j);
  for (std::size_t k = 0; k < match_b; ++k)
    e.emplace_back(static_cast<Vertex>(size_a + 2 * k), static_cast<Vertex>(size_a + 2 * k + 1));
  for (Vertex a = 0; a < size_a; ++a) {
    for (std::size_t k = 0; k < match_b; ++k) {
      auto b0 = static_cast<Vertex>(size_a + 2 * k);
      // At most one endpoint of each B-edge may be joined to a.
      bool first = rng.bernoulli(p_ab);
      bool second = rng.bernoulli(p_ab);
      if (first)
        e.emplace_back(a, b0);
      else if (second)
        e.emplace_back(a, b0 + 1);
    }
  }
  Graph g = Graph::from_edges(n, e);
  VertexSet a(n), b(n);
  for (Vertex v = 0; v < n; ++v) (v < size_a ? a : b).insert(v);
  auto part = SatPartition::make(g, std::move(a), std::move(b));
  return {std::move(g), std::move(part)};
}

Graph substitute(const Graph& h, Vertex slot, const Graph& g) {
  if (slot >= h.order()) throw GraphError("substitution slot out of range");
  std::size_t k = g.order();
  auto place = [&](Vertex v) -> Vertex { return v < slot ? v : static_cast<Vertex>(v + k - 1); };
  std::vector<Edge> e;
  for (auto [u, v] : h.edges()) {
    if (u == slot || v == slot) {
      Vertex other = place(u == slot ? v : u);
      for (Vertex i = 0; i < k; ++i) e.emplace_back(other, slot + i);
    } else {
      e.emplace_back(place(u), place(v));
    }
  }
  for (auto [u, v] : g.edges()) e.emplace_back(slot + u, slot + v);
  return Graph::from_edges(h.order() + k - 1, e);
}

Graph random_p5_free(std::size_t n, Rng& rng, bool prime, std::size_t budget) {
  for (std::size_t attempt = 0; attempt <= budget; ++attempt) {
    double p = 0.15 + 0.7 * static_cast<double>(rng.uniform(0, 1000)) / 1000.0;
    Graph g = gnp(n, p, rng);
    if (prime && !is_prime(g)) continue;
    if (is_free(g, kP5Pair)) return g;
  }
  throw GenerationError("no (P5, co-P5)-free sample on " + std::to_string(n) + " vertices within budget");
}

Graph substitution_instance(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::size_t start = std::min<std::size_t>(n, rng.uniform(2, 6));
  Graph g = random_p5_free(start, rng, start >= 4);
  while (g.order() < n) {
    std::size_t room = n - g.order() + 1;
    std::size_t k = std::min<std::size_t>(room, rng.uniform(2, 6));
    Graph factor = random_p5_free(k, rng, k >= 4);
    auto slot = static_cast<Vertex>(rng.uniform(0, g.order() - 1));
    g = substitute(g, slot, factor);
  }
  return g;
}

PlantedModule planted_module(std::size_t outer_n, std::size_t inner_n, std::uint64_t seed) {
  Rng rng(seed);
  Graph host = random_p5_free(outer_n, rng, outer_n >= 4);
  Graph inner = random_p5_free(inner_n, rng);
  auto slot = static_cast<Vertex>(rng.uniform(0, outer_n - 1));
  PlantedModule out{substitute(host, slot, inner), {}};
  out.module = VertexSet(out.graph.order());
  for (Vertex i = 0; i < inner_n; ++i) out.module.insert(slot + i);
  return out;
}

std::vector<Weight> random_weights(std::size_t n, Weight lo, Weight hi, Rng& rng) {
  std::vector<Weight> w(n);
  for (auto& x : w)
    x = static_cast<Weight>(rng.uniform(static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi)));
  return w;
}

}  // namespace idom
