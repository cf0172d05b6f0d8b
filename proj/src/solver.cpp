#include "idom/solver.hpp"

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <unordered_map>

namespace idom {

namespace {

struct Cost {
  std::int64_t forbidden = 0;
  Weight weight = 0;

  friend auto operator<=>(const Cost&, const Cost&) = default;
  Cost& operator+=(const Cost& o) {
    forbidden += o.forbidden;
    weight += o.weight;
    return *this;
  }
};

// Result of one subproblem. `local` is in the node's own ids; `chosen` is the
// fully expanded set in root ids.
struct Partial {
  bool feasible = false;
  Cost cost;
  VertexSet local;
  VertexSet chosen;
};

bool better(const Partial& a, const Partial& b) {
  if (!a.feasible) return false;
  if (!b.feasible) return true;
  if (a.cost != b.cost) return a.cost < b.cost;
  return set_precedes(a.chosen, b.chosen);
}

// Per-vertex cost and root expansion plus demand hitsets, all in local ids of
// one tree node. A vertex standing in for a solved module carries that
// module's cost and vertex set.
struct State {
  std::vector<Cost> cost;
  std::vector<VertexSet> expand;
  std::vector<VertexSet> demands;
};

// Every maximal independent set of a leaf graph.
std::vector<VertexSet> leaf_mis(const Graph& g) {
  std::size_t n = g.order();
  std::vector<VertexSet> out;
  if (g.edge_count() == 0) {
    out.push_back(VertexSet::full(n));
  } else if (g.edge_count() == 1) {
    auto [x, y] = g.edges().front();
    VertexSet without_x = VertexSet::full(n), without_y = VertexSet::full(n);
    without_x.erase(x);
    without_y.erase(y);
    out.push_back(std::move(without_x));
    out.push_back(std::move(without_y));
  } else {
    for (Vertex v = 0; v < n; ++v) out.push_back(VertexSet(n, {v}));
  }
  return out;
}

VertexSet map_down(const VertexSet& parent_set, const std::vector<Vertex>& to_parent) {
  VertexSet out(to_parent.size());
  for (std::size_t i = 0; i < to_parent.size(); ++i)
    if (parent_set.contains(to_parent[i])) out.insert(static_cast<Vertex>(i));
  return out;
}

// Drops duplicate demands and demands implied by a smaller one, then sorts.
// Returns false when some hitset is empty.
bool canonicalize(std::vector<VertexSet>& demands) {
  for (const auto& d : demands)
    if (d.empty()) return false;
  std::sort(demands.begin(), demands.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return set_precedes(a, b);
  });
  std::vector<VertexSet> kept;
  for (auto& d : demands) {
    bool implied = std::any_of(kept.begin(), kept.end(), [&](const VertexSet& k) { return k.is_subset_of(d); });
    if (!implied) kept.push_back(std::move(d));
  }
  demands = std::move(kept);
  return true;
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : key) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

class SoundSolver {
 public:
  SoundSolver(const DecompTree& tree) : tree_(tree), root_n_(tree.root_order) {}

  Partial solve(std::size_t idx, State s) {
    ++stats_.calls;
    if (!canonicalize(s.demands)) return {};
    stats_.max_demands = std::max(stats_.max_demands, s.demands.size());

    auto key = make_key(idx, s);
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
    const DecompNode& node = tree_.nodes[idx];
    Partial result;
    switch (node.kind) {
      case NodeKind::LeafF:
      case NodeKind::LeafComplete: result = solve_leaf(node.graph, s, nullptr); break;
      case NodeKind::Antineighborhood: result = solve_antineighborhood(node, s); break;
      case NodeKind::Homogeneous: result = solve_homogeneous(node, s); break;
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  SolverStats stats() const {
    SolverStats st = stats_;
    st.tree_nodes = tree_.node_count();
    return st;
  }

 private:
  std::vector<std::uint64_t> make_key(std::size_t idx, const State& s) const {
    std::vector<std::uint64_t> key;
    key.push_back(idx);
    for (std::size_t i = 0; i < s.cost.size(); ++i) {
      key.push_back(static_cast<std::uint64_t>(s.cost[i].forbidden));
      key.push_back(static_cast<std::uint64_t>(s.cost[i].weight));
      auto w = s.expand[i].words();
      key.insert(key.end(), w.begin(), w.end());
    }
    key.push_back(s.demands.size());
    for (const auto& d : s.demands) {
      auto w = d.words();
      key.insert(key.end(), w.begin(), w.end());
    }
    return key;
  }

  Partial evaluate(const VertexSet& local, const State& s) const {
    for (const auto& d : s.demands)
      if (!local.intersects(d)) return {};
    Partial p{true, {}, local, VertexSet(root_n_)};
    for (Vertex v = local.first(); v < local.universe(); v = local.next(v)) {
      p.cost += s.cost[v];
      p.chosen |= s.expand[v];
    }
    return p;
  }

  // Best maximal independent set of a leaf graph. With `to_parent`, the leaf
  // is a child whose sets are evaluated in the parent's state.
  Partial solve_leaf(const Graph& g, const State& s, const std::vector<Vertex>* to_parent) const {
    Partial best;
    for (const auto& cand : leaf_mis(g)) {
      VertexSet local = to_parent ? lift(cand, *to_parent, s.cost.size()) : cand;
      Partial p = evaluate(local, s);
      if (better(p, best)) best = std::move(p);
    }
    return best;
  }

  State restrict_to(const DecompNode& child, const State& s, const std::vector<VertexSet>& parent_demands,
                    bool& feasible) const {
    State c;
    std::size_t m = child.to_parent.size();
    c.cost.resize(m);
    c.expand.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      c.cost[i] = s.cost[child.to_parent[i]];
      c.expand[i] = s.expand[child.to_parent[i]];
    }
    feasible = true;
    for (const auto& d : parent_demands) {
      VertexSet mapped = map_down(d, child.to_parent);
      if (mapped.empty()) feasible = false;
      c.demands.push_back(std::move(mapped));
    }
    return c;
  }

  Partial lift_partial(Partial p, const DecompNode& child, std::size_t parent_order) const {
    if (p.feasible) p.local = lift(p.local, child.to_parent, parent_order);
    return p;
  }

  Partial solve_antineighborhood(const DecompNode& node, const State& s) {
    Vertex v = node.branch_vertex;
    const DecompNode& leaf = tree_.nodes[node.children[0]];
    std::size_t rest_idx = node.children[1];
    const DecompNode& rest = tree_.nodes[rest_idx];

    // v in the solution: the maximal independent sets of G - N(v), all containing v.
    Partial best = solve_leaf(leaf.graph, s, &leaf.to_parent);

    // v outside the solution: solve G - v, where some neighbour of v must be chosen.
    std::vector<VertexSet> demands;
    for (const auto& d : s.demands) {
      VertexSet shrunk = d;
      shrunk.erase(v);
      if (shrunk.empty()) return best;
      demands.push_back(std::move(shrunk));
    }
    demands.push_back(node.graph.neighbors(v));
    bool feasible = true;
    State child = restrict_to(rest, s, demands, feasible);
    if (!feasible) return best;
    Partial r = lift_partial(solve(rest_idx, std::move(child)), rest, node.graph.order());
    if (better(r, best)) best = std::move(r);
    return best;
  }

  Partial solve_homogeneous(const DecompNode& node, const State& s) {
    const VertexSet& m = node.module;
    Vertex h = node.representative;
    std::size_t n = node.graph.order();
    std::size_t inner_idx = node.children[0], outer_idx = node.children[1];
    const DecompNode& inner = tree_.nodes[inner_idx];
    const DecompNode& outer = tree_.nodes[outer_idx];
    Vertex h_outer = static_cast<Vertex>(
        std::find(outer.to_parent.begin(), outer.to_parent.end(), h) - outer.to_parent.begin());

    std::vector<VertexSet> inside, outside, mixed;
    for (const auto& d : s.demands) {
      if (d.is_subset_of(m))
        inside.push_back(d);
      else if (!d.intersects(m))
        outside.push_back(d);
      else
        mixed.push_back(d);
    }
    std::size_t k = mixed.size();
    stats_.max_mixed = std::max(stats_.max_mixed, k);
    if (k > 24) throw std::runtime_error("too many mixed demands at a homogeneous node");

    auto solve_inner = [&](const std::vector<VertexSet>& demands) {
      bool feasible = true;
      State st = restrict_to(inner, s, demands, feasible);
      if (!feasible) return Partial{};
      return lift_partial(solve(inner_idx, std::move(st)), inner, n);
    };
    // Outer graph with h standing for the inner solution; `force_h` adds the demand {h}.
    auto solve_outer = [&](const Partial& in, std::vector<VertexSet> demands, bool force_h) {
      if (force_h) demands.push_back(VertexSet(n, {h}));
      bool feasible = true;
      State st = restrict_to(outer, s, demands, feasible);
      if (!feasible) return Partial{};
      st.cost[h_outer] = in.cost;
      st.expand[h_outer] = in.chosen;
      Partial r = lift_partial(solve(outer_idx, std::move(st)), outer, n);
      if (r.feasible && r.local.contains(h)) {
        r.local.erase(h);
        r.local |= in.local;
      }
      return r;
    };
    auto outside_part = [&](const VertexSet& d) { return d - m; };

    Partial best;
    std::vector<std::uint32_t> infeasible_masks;
    std::vector<std::uint32_t> done_closures;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
      if (std::any_of(infeasible_masks.begin(), infeasible_masks.end(),
                      [&](std::uint32_t bad) { return (bad & mask) == bad; }))
        continue;
      std::vector<VertexSet> inner_demands = inside;
      for (std::size_t j = 0; j < k; ++j)
        if (mask >> j & 1U) inner_demands.push_back(mixed[j] & m);
      Partial in = solve_inner(inner_demands);
      if (!in.feasible) {
        infeasible_masks.push_back(mask);
        continue;
      }

      if (mask == 0 && inside.empty()) {
        // h is optional here: avoiding h covers every solution disjoint from M,
        // using h covers those meeting M that satisfy all mixed demands outside.
        std::vector<VertexSet> demands = outside;
        for (const auto& d : mixed) demands.push_back(outside_part(d));
        Partial r = solve_outer(in, std::move(demands), false);
        if (better(r, best)) best = std::move(r);
      }

      std::uint32_t closure = mask;
      for (std::size_t j = 0; j < k; ++j)
        if (in.local.intersects(mixed[j])) closure |= std::uint32_t{1} << j;
      if (std::find(done_closures.begin(), done_closures.end(), closure) != done_closures.end()) continue;
      done_closures.push_back(closure);
      if (closure == 0 && inside.empty()) continue;  // already covered by the optional-h call

      std::vector<VertexSet> demands = outside;
      for (std::size_t j = 0; j < k; ++j)
        if (!(closure >> j & 1U)) demands.push_back(outside_part(mixed[j]));
      Partial r = solve_outer(in, std::move(demands), true);
      if (better(r, best)) best = std::move(r);
    }
    return best;
  }

  const DecompTree& tree_;
  std::size_t root_n_;
  std::unordered_map<std::vector<std::uint64_t>, Partial, KeyHash> memo_;
  SolverStats stats_;
};

}  // namespace

WeightedGraph induced_weighted(const WeightedGraph& g, const Subgraph& sub) {
  std::vector<Weight> w;
  w.reserve(sub.to_host.size());
  for (Vertex v : sub.to_host) w.push_back(g.weight(v));
  return WeightedGraph(sub.graph, std::move(w));
}

Solution solve_constrained(const WeightedGraph& g, const std::vector<Demand>& demands, const VertexSet& forbidden,
                           SolverStats* stats) {
  std::size_t n = g.order();
  if (forbidden.universe() != n) throw GraphError("forbidden set universe does not match graph order");
  State s;
  s.cost.resize(n);
  s.expand.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    s.cost[v] = {forbidden.contains(v) ? 1 : 0, g.weight(v)};
    s.expand[v] = VertexSet(n, {v});
  }
  for (const auto& d : demands) {
    if (d.hitset.universe() != n) throw GraphError("demand hitset universe does not match graph order");
    s.demands.push_back(d.hitset);
  }

  DecompTree tree = build_tree(g.graph());
  SoundSolver solver(tree);
  Partial p = solver.solve(0, std::move(s));
  if (stats) *stats = solver.stats();
  if (!p.feasible) return Solution::infeasible();
  if (!is_maximal_independent(g.graph(), p.chosen))
    throw std::logic_error("solver produced a set that is not maximal independent");
  return Solution{true, p.chosen, p.cost.forbidden, p.cost.weight};
}

Solution solve_constrained(const WeightedGraph& g, const std::vector<Demand>& demands, SolverStats* stats) {
  return solve_constrained(g, demands, VertexSet(g.order()), stats);
}

Solution solve_wid(const WeightedGraph& g, SolverStats* stats) { return solve_constrained(g, {}, stats); }

Solution solve_id(const Graph& g, SolverStats* stats) { return solve_wid(WeightedGraph::unit(g), stats); }

namespace {

struct NaiveSolver {
  // g is an induced subgraph of the root; to_root maps its ids.
  NaiveResult run(const Graph& g, const std::vector<Weight>& w, const std::vector<Vertex>& to_root,
                  std::optional<Vertex> pinned) {
    std::size_t n = g.order();
    if (pinned) {
      if (g.edge_count() <= 1 || is_complete(g) || find_homogeneous_set(g))
        throw std::invalid_argument("pinned branch vertex requires a prime non-leaf root");
      if (*pinned >= n || edges_within(g, antineighborhood(g, *pinned)) > 1)
        throw std::invalid_argument("pinned branch vertex must have an antineighbourhood with at most one edge");
      return branch(g, w, to_root, *pinned);
    }
    if (g.edge_count() <= 1 || is_complete(g)) return leaf(g, w, to_root);
    if (auto m = find_homogeneous_set(g)) return homogeneous(g, w, to_root, *m);
    Vertex v;
    try {
      v = find_good_vertex(g);
    } catch (const NotInClass& e) {
      throw NotInClass(g, to_root, e.witness());
    }
    return branch(g, w, to_root, v);
  }

  std::size_t root_n;

  NaiveResult leaf(const Graph& g, const std::vector<Weight>& w, const std::vector<Vertex>& to_root) const {
    NaiveResult best;
    bool have = false;
    for (const auto& cand : leaf_mis(g)) {
      Weight total = 0;
      for (Vertex v = cand.first(); v < g.order(); v = cand.next(v)) total += w[v];
      VertexSet root_set = lift(cand, to_root, root_n);
      if (!have || total < best.value || (total == best.value && set_precedes(root_set, best.witness))) {
        best.value = total;
        best.witness = root_set;
        have = true;
      }
    }
    return best;
  }

  NaiveResult homogeneous(const Graph& g, const std::vector<Weight>& w, const std::vector<Vertex>& to_root,
                          const VertexSet& m) {
    Vertex h = m.first();
    Subgraph in = induced_subgraph(g, m);
    VertexSet outer_keep = m.complement();
    outer_keep.insert(h);
    Subgraph out = induced_subgraph(g, outer_keep);

    NaiveResult inner = run(in.graph, pick(w, in.to_host), compose(in.to_host, to_root), std::nullopt);
    std::vector<Weight> ow = pick(w, out.to_host);
    Vertex h_out = static_cast<Vertex>(std::find(out.to_host.begin(), out.to_host.end(), h) - out.to_host.begin());
    ow[h_out] = inner.value;
    NaiveResult outer = run(out.graph, ow, compose(out.to_host, to_root), std::nullopt);
    Vertex h_root = to_root[h];
    if (outer.witness.contains(h_root)) {
      outer.witness.erase(h_root);
      outer.witness |= inner.witness;
    }
    return outer;
  }

  NaiveResult branch(const Graph& g, const std::vector<Weight>& w, const std::vector<Vertex>& to_root, Vertex v) {
    Subgraph anti = induced_subgraph(g, antineighborhood(g, v));
    NaiveResult first = leaf(anti.graph, pick(w, anti.to_host), compose(anti.to_host, to_root));
    Subgraph rest = remove_vertex(g, v);
    NaiveResult second = run(rest.graph, pick(w, rest.to_host), compose(rest.to_host, to_root), std::nullopt);

    if (first.value <= second.value) return first;
    // Greedy fix-up: v joins the witness when none of its neighbours is in it.
    VertexSet nb = lift(g.neighbors(v), to_root, root_n);
    if (!second.witness.intersects(nb)) second.witness.insert(to_root[v]);
    return second;
  }

  static std::vector<Weight> pick(const std::vector<Weight>& w, const std::vector<Vertex>& ids) {
    std::vector<Weight> out;
    out.reserve(ids.size());
    for (Vertex v : ids) out.push_back(w[v]);
    return out;
  }

  static std::vector<Vertex> compose(const std::vector<Vertex>& inner, const std::vector<Vertex>& outer) {
    std::vector<Vertex> out;
    out.reserve(inner.size());
    for (Vertex v : inner) out.push_back(outer[v]);
    return out;
  }
};

}  // namespace

NaiveResult solve_naive_eq1(const WeightedGraph& g, NaiveOptions options) {
  NaiveSolver solver{g.order()};
  std::vector<Vertex> ids(g.order());
  for (Vertex v = 0; v < g.order(); ++v) ids[v] = v;
  NaiveResult r = solver.run(g.graph(), g.weights(), ids, options.root_branch_vertex);
  r.witness_weight = g.weight_of(r.witness);
  r.witness_is_mis = is_maximal_independent(g.graph(), r.witness);
  return r;
}

TwoTermValue eq1_two_term(const WeightedGraph& g, Vertex v) {
  if (v >= g.order()) throw GraphError("vertex out of range");
  TwoTermValue t;
  t.antineighborhood_term = solve_wid(induced_weighted(g, induced_subgraph(g.graph(), antineighborhood(g.graph(), v)))).weight;
  t.deletion_term = solve_wid(induced_weighted(g, remove_vertex(g.graph(), v))).weight;
  return t;
}

}  // namespace idom
