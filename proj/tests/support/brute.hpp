#pragma once

// Brute-force references used to cross-check the library. They only read
// adjacency and never call the predicates under test.

#include <cstdint>
#include <optional>
#include <vector>

#include "idom/demand.hpp"
#include "idom/graph.hpp"

namespace brute {

using idom::Graph;
using idom::Vertex;
using idom::Weight;

inline std::vector<Vertex> members(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < 32; ++v)
    if (mask >> v & 1U) out.push_back(v);
  return out;
}

inline bool independent(const Graph& g, std::uint32_t mask) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if ((mask >> u & 1U) && (mask >> v & 1U) && g.adjacent(u, v)) return false;
  return true;
}

inline bool dominating(const Graph& g, std::uint32_t mask) {
  for (Vertex v = 0; v < g.order(); ++v) {
    bool hit = mask >> v & 1U;
    for (Vertex u = 0; u < g.order() && !hit; ++u) hit = (mask >> u & 1U) && g.adjacent(u, v);
    if (!hit) return false;
  }
  return true;
}

/// Every maximal independent set as a bit mask, by subset enumeration (n <= 20).
inline std::vector<std::uint32_t> all_mis(const Graph& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1U << g.order()); ++m)
    if (independent(g, m) && dominating(g, m)) out.push_back(m);
  return out;
}

/// Lexicographic order on sorted member lists.
inline bool lex_less(std::uint32_t a, std::uint32_t b) { return members(a) < members(b); }

struct Best {
  Weight value = 0;
  std::vector<Vertex> witness;
};

/// Minimum-weight maximal independent set hitting every demand; ties go to the
/// lexicographically smallest member list.
inline std::optional<Best> min_wid(const Graph& g, const std::vector<Weight>& w,
                                   const std::vector<idom::Demand>& demands = {}) {
  std::optional<std::uint32_t> best;
  Weight best_value = 0;
  for (std::uint32_t m : all_mis(g)) {
    bool ok = true;
    for (const auto& d : demands) {
      bool hit = false;
      for (Vertex v : members(m)) hit = hit || d.hitset.contains(v);
      ok = ok && hit;
    }
    if (!ok) continue;
    Weight value = 0;
    for (Vertex v : members(m)) value += w[v];
    if (!best || value < best_value || (value == best_value && lex_less(m, *best))) {
      best = m;
      best_value = value;
    }
  }
  if (!best) return std::nullopt;
  return Best{best_value, members(*best)};
}

inline std::size_t min_dominating(const Graph& g) {
  std::size_t best = g.order();
  for (std::uint32_t m = 0; m < (1U << g.order()); ++m)
    if (dominating(g, m)) best = std::min<std::size_t>(best, members(m).size());
  return best;
}

/// First injective tuple, in lexicographic order, that induces `pattern`.
inline std::optional<std::vector<Vertex>> find_induced(const Graph& g, const Graph& pattern) {
  std::size_t k = pattern.order(), n = g.order();
  if (k > n) return std::nullopt;
  std::vector<Vertex> t(k, 0);
  while (true) {
    bool distinct = true;
    for (std::size_t i = 0; i < k && distinct; ++i)
      for (std::size_t j = i + 1; j < k && distinct; ++j) distinct = t[i] != t[j];
    if (distinct) {
      bool match = true;
      for (Vertex i = 0; i < k && match; ++i)
        for (Vertex j = i + 1; j < k && match; ++j) match = g.adjacent(t[i], t[j]) == pattern.adjacent(i, j);
      if (match) return t;
    }
    std::size_t pos = k;
    while (pos > 0 && t[pos - 1] + 1 == n) t[--pos] = 0;
    if (pos == 0) return std::nullopt;
    ++t[pos - 1];
  }
}

/// True iff some subset M with 2 <= |M| < n is a module.
inline bool has_module(const Graph& g) {
  std::size_t n = g.order();
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    auto in = members(m);
    if (in.size() < 2 || in.size() >= n) continue;
    bool module = true;
    for (Vertex z = 0; z < n && module; ++z) {
      if (m >> z & 1U) continue;
      std::size_t seen = 0;
      for (Vertex v : in) seen += g.adjacent(z, v);
      module = seen == 0 || seen == in.size();
    }
    if (module) return true;
  }
  return false;
}

/// Some split into a clique A and an induced perfect matching B with no
/// triangle (a, b, b'), by enumerating all 2^n splits.
inline bool is_sat_graph(const Graph& g) {
  std::size_t n = g.order();
  for (std::uint32_t a = 0; a < (1U << n); ++a) {
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u)
      for (Vertex v = u + 1; v < n && ok; ++v)
        if ((a >> u & 1U) && (a >> v & 1U)) ok = g.adjacent(u, v);
    for (Vertex v = 0; v < n && ok; ++v) {
      if (a >> v & 1U) continue;
      std::size_t partners = 0;
      for (Vertex u = 0; u < n; ++u)
        if (!(a >> u & 1U) && g.adjacent(u, v)) ++partners;
      ok = partners == 1;
    }
    for (Vertex x = 0; x < n && ok; ++x) {
      if (!(a >> x & 1U)) continue;
      for (Vertex u = 0; u < n && ok; ++u)
        for (Vertex v = u + 1; v < n && ok; ++v)
          if (!(a >> u & 1U) && !(a >> v & 1U) && g.adjacent(u, v))
            ok = !(g.adjacent(x, u) && g.adjacent(x, v));
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace brute
