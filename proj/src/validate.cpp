#include "idom/validate.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "idom/decomposition.hpp"
#include "idom/hardness.hpp"
#include "idom/oracle.hpp"
#include "idom/patterns.hpp"
#include "idom/solver.hpp"

namespace idom {

namespace {

const std::vector<PatternId> kP5Pair = {kP5, kCoP5};
const std::vector<PatternId> kShortCycles = {kC3, kC4, kC5, kC6};
const std::vector<PatternId> kGStarForbidden = {kDomino, kSun3};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t i) { return splitmix64(splitmix64(seed) ^ i); }

template <class Make>
std::vector<Instance> build_corpus(std::uint64_t seed, std::size_t count, Make make) {
  std::vector<Instance> out(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    std::uint64_t s = instance_seed(seed, static_cast<std::size_t>(i));
    Rng rng(s);
    out[i] = make(rng);
    out[i].seed = s;
  }
  return out;
}

std::string describe(const VertexSet& s) { return to_string(s); }

std::optional<std::string> check_solver(const Instance& inst) {
  WeightedGraph wg = inst.weighted();
  Solution s = solve_wid(wg);
  OracleReport o = oracle_wid(wg);
  if (!s.feasible) return "solver reported infeasible";
  if (!is_maximal_independent(wg.graph(), s.vertices)) return "solver witness " + describe(s.vertices) + " is not maximal independent";
  if (wg.weight_of(s.vertices) != s.weight) return "solver witness weight differs from reported value";
  if (s.weight != o.value)
    return "value " + std::to_string(s.weight) + " but oracle " + std::to_string(o.value);
  if (!(s.vertices == o.witness)) return "witness " + describe(s.vertices) + " but oracle " + describe(o.witness);
  return std::nullopt;
}

std::optional<std::string> check_constrained(const Instance& inst) {
  WeightedGraph wg = inst.weighted();
  Solution s = solve_constrained(wg, inst.demands);
  auto o = oracle_constrained(wg, inst.demands);
  if (!o) return s.feasible ? std::optional<std::string>("solver feasible but oracle infeasible") : std::nullopt;
  if (!s.feasible) return "solver infeasible but oracle value " + std::to_string(o->value);
  if (!is_maximal_independent(wg.graph(), s.vertices)) return "solver witness is not maximal independent";
  for (const auto& d : inst.demands)
    if (!s.vertices.intersects(d.hitset)) return "solver witness misses demand " + describe(d.hitset);
  if (s.weight != o->value) return "value " + std::to_string(s.weight) + " but oracle " + std::to_string(o->value);
  if (!(s.vertices == o->witness)) return "witness " + describe(s.vertices) + " but oracle " + describe(o->witness);
  return std::nullopt;
}

SatPartition partition_of(const Instance& inst) {
  if (inst.partition) return *inst.partition;
  auto p = find_sat_partition(inst.graph);
  if (!p) throw std::runtime_error("not a sat-graph");
  return *p;
}

std::optional<std::string> check_partition(const Graph& g, const SatPartition& p) {
  auto v = verify_sat_partition(g, p.a, p.b);
  if (!v.ok()) return "invalid sat-partition: " + v.detail;
  return std::nullopt;
}

std::optional<std::string> check_obs1(const Instance& inst) {
  SatPartition p = partition_of(inst);
  if (auto bad = check_partition(inst.graph, p)) return bad;
  return idom::check_obs1(inst.graph, p);
}

std::optional<std::string> check_obs2(const Instance& inst) {
  SatPartition p = partition_of(inst);
  if (auto bad = check_partition(inst.graph, p)) return bad;
  auto id = static_cast<std::size_t>(oracle_id(inst.graph).value);
  if (id < p.s() || id > p.s() + 1)
    return "id " + std::to_string(id) + " outside [s, s+1] with s = " + std::to_string(p.s());
  return std::nullopt;
}

std::optional<std::string> check_lemma1(const Instance& inst) {
  SatPartition p = partition_of(inst);
  if (auto bad = check_partition(inst.graph, p)) return bad;
  for (Vertex a : p.a.to_vector())
    for (Vertex b : p.b.to_vector()) {
      if (!inst.graph.adjacent(a, b)) continue;
      GammaResult r = gamma_transform(inst.graph, p, a, b);
      if (auto bad = check_partition(r.graph, r.partition)) return "after gamma: " + *bad;
      Weight before = oracle_id(inst.graph).value;
      Weight after = oracle_id(r.graph).value;
      if (after != before + 1)
        return "gamma(" + std::to_string(a) + "," + std::to_string(b) + "): id " + std::to_string(before) +
               " -> " + std::to_string(after);
      return std::nullopt;
    }
  return std::nullopt;
}

std::optional<std::string> check_lemma2(const Instance& inst) {
  SatPartition p = partition_of(inst);
  if (auto bad = check_partition(inst.graph, p)) return bad;
  StarResult r = star_transform(inst.graph, p);
  if (auto bad = check_partition(r.graph, r.partition)) return "G*: " + *bad;
  for (const auto& pat : kGStarForbidden)
    if (auto occ = find_induced(r.graph, pat)) {
      std::string msg = "G* contains " + pattern_name(pat) + " on";
      for (Vertex v : occ->vertices) msg += " " + std::to_string(v);
      return msg;
    }
  GStarVerdict v = check_gstar_properties(r.graph, r.partition, r.markers);
  if (!v.ok()) return "G* property " + std::to_string(v.failed_property) + ": " + v.detail;
  return std::nullopt;
}

std::optional<std::string> check_thm1(const Instance& inst) {
  WidReduction r = build_wid_reduction(inst.graph);
  ReductionClassReport cls = check_reduction_class(r);
  if (!cls.sat_partition_ok) return "target sat-partition: " + cls.sat_detail;
  if (!cls.c4_free) return "target contains C4";
  if (cls.source_in_class && !cls.sun3_free) return "target contains Sun3";
  EquivalenceReport eq = check_reduction_equivalence(inst.graph);
  auto expected = static_cast<Weight>(inst.graph.order()) + eq.gamma_dom;
  if (eq.idw_target != expected)
    return "id_w(target) " + std::to_string(eq.idw_target) + " but n + gamma = " + std::to_string(expected);
  return std::nullopt;
}

std::optional<std::string> check_tree(const Instance& inst) {
  DecompTree t = build_tree(inst.graph);
  if (!labels_distinct(t)) return "repeated label or too many internal nodes";
  return std::nullopt;
}

std::optional<std::string> check_substitution(const Instance& inst) {
  if (!inst.module) throw SuiteUsageError("instance has no planted module");
  WeightedGraph wg = inst.weighted();
  const VertexSet& m = *inst.module;
  if (!is_module(inst.graph, m)) return "planted set is not a module";
  Subgraph inner = induced_subgraph(inst.graph, m);
  Weight inner_value = oracle_wid(induced_weighted(wg, inner)).value;
  Vertex h = m.first();
  VertexSet outer = m.complement();
  outer.insert(h);
  Subgraph quotient = induced_subgraph(inst.graph, outer);
  std::vector<Weight> w;
  for (Vertex v : quotient.to_host) w.push_back(v == h ? inner_value : wg.weight(v));
  Weight direct = oracle_wid(wg).value;
  Weight substituted = oracle_wid(WeightedGraph(quotient.graph, w)).value;
  if (direct != substituted)
    return "id_w(G) " + std::to_string(direct) + " but substituted " + std::to_string(substituted);
  Weight solved = solve_wid(wg).weight;
  if (solved != direct) return "solver " + std::to_string(solved) + " but oracle " + std::to_string(direct);
  return std::nullopt;
}

Instance random_class_instance(Rng& rng, std::size_t max_n) {
  std::size_t n = rng.uniform(1, max_n);
  Instance inst;
  inst.graph = random_p5_free(n, rng);
  inst.weights = random_weights(n, 0, 100, rng);
  return inst;
}

Instance substitution_instance_of(Rng& rng, std::size_t max_n) {
  std::size_t lo = std::min<std::size_t>(6, max_n);
  std::size_t n = rng.uniform(lo, max_n);
  Instance inst;
  inst.graph = substitution_instance(n, rng.next());
  inst.weights = random_weights(n, 0, 100, rng);
  return inst;
}

Instance mixed_instance(Rng& rng, std::size_t i) {
  return i % 6 == 5 ? substitution_instance_of(rng, 18) : random_class_instance(rng, 12);
}

std::vector<Instance> mixed_corpus(std::uint64_t seed, std::size_t count) {
  std::vector<Instance> out(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    std::uint64_t s = instance_seed(seed, static_cast<std::size_t>(i));
    Rng rng(s);
    out[i] = mixed_instance(rng, static_cast<std::size_t>(i));
    out[i].seed = s;
  }
  return out;
}

bool has_ab_edge(const Graph& g, const SatPartition& p) {
  for (Vertex a : p.a.to_vector())
    if (g.neighbors(a).intersects(p.b)) return true;
  return false;
}

bool is_complete_mask(std::size_t n, std::uint64_t mask) {
  std::size_t pairs = n * (n - 1) / 2;
  return pairs == 64 ? mask == ~0ULL : mask == (1ULL << pairs) - 1;
}

struct MaskVerdict {
  bool classified = false;
  bool failure = false;
};

MaskVerdict examine_mask(std::size_t n, std::uint64_t mask) {
  if (is_complete_mask(n, mask)) return {};
  Graph g = graph_from_mask(n, mask);
  if (find_antisimplicial(g) || is_c5(g)) return {};
  bool failure = is_free(g, kP5Pair) && is_prime(g);
  return {true, failure};
}

}  // namespace

WeightedGraph Instance::weighted() const {
  if (weights) return WeightedGraph(graph, *weights);
  return WeightedGraph::unit(graph);
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Obs1: return "obs1";
    case Suite::Obs2: return "obs2";
    case Suite::Lemma1: return "lemma1";
    case Suite::Lemma2: return "lemma2";
    case Suite::Thm1: return "thm1";
    case Suite::Lemma6: return "lemma6";
    case Suite::Solver: return "solver";
    case Suite::Constrained: return "constrained";
    case Suite::TreeBounds: return "tree";
    case Suite::Substitution: return "substitution";
  }
  return "?";
}

Suite parse_suite(const std::string& name) {
  for (Suite s : {Suite::Obs1, Suite::Obs2, Suite::Lemma1, Suite::Lemma2, Suite::Thm1, Suite::Lemma6, Suite::Solver,
                  Suite::Constrained, Suite::TreeBounds, Suite::Substitution})
    if (suite_name(s) == name) return s;
  throw SuiteUsageError("unknown suite '" + name + "'");
}

std::optional<std::string> check_instance(Suite suite, const Instance& inst) {
  try {
    switch (suite) {
      case Suite::Obs1: return check_obs1(inst);
      case Suite::Obs2: return check_obs2(inst);
      case Suite::Lemma1: return check_lemma1(inst);
      case Suite::Lemma2: return check_lemma2(inst);
      case Suite::Thm1: return check_thm1(inst);
      case Suite::Solver: return check_solver(inst);
      case Suite::Constrained: return check_constrained(inst);
      case Suite::TreeBounds: return check_tree(inst);
      case Suite::Substitution: return check_substitution(inst);
      case Suite::Lemma6: throw SuiteUsageError("lemma6 is not a per-instance suite");
    }
  } catch (const SuiteUsageError&) {
    throw;
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
  return std::nullopt;
}

SuiteReport run_suite(Suite suite, const std::vector<Instance>& corpus, Execution exec) {
  if (suite == Suite::Lemma6) throw SuiteUsageError("use check_lemma6 for the lemma6 suite");
  std::vector<std::optional<std::string>> verdicts(corpus.size());
  const auto n = static_cast<std::int64_t>(corpus.size());
  if (exec == Execution::Parallel) {
    std::string error;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        verdicts[i] = check_instance(suite, corpus[i]);
      } catch (const SuiteUsageError& e) {
#pragma omp critical
        error = e.what();
      }
    }
    if (!error.empty()) throw SuiteUsageError(error);
  } else {
    for (std::int64_t i = 0; i < n; ++i) verdicts[i] = check_instance(suite, corpus[i]);
  }
  SuiteReport r;
  r.suite = suite;
  r.total = corpus.size();
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    if (verdicts[i])
      r.failures.push_back({i, *verdicts[i]});
    else
      ++r.passed;
  }
  return r;
}

std::vector<Instance> random_class_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n) {
  return build_corpus(seed, count, [&](Rng& rng) { return random_class_instance(rng, max_n); });
}

std::vector<Instance> substitution_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n) {
  return build_corpus(seed, count, [&](Rng& rng) { return substitution_instance_of(rng, max_n); });
}

std::vector<Instance> with_random_demands(std::vector<Instance> corpus, std::uint64_t seed) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Rng rng(instance_seed(seed ^ 0xd3ad5eedULL, i));
    std::size_t n = corpus[i].graph.order();
    corpus[i].demands.clear();
    if (n == 0) continue;
    std::size_t k = rng.uniform(0, 3);
    for (std::size_t d = 0; d < k; ++d) {
      Demand dem{-1, VertexSet(n)};
      std::size_t size = rng.uniform(1, std::min<std::size_t>(3, n));
      for (std::size_t j = 0; j < size; ++j) dem.hitset.insert(static_cast<Vertex>(rng.uniform(0, n - 1)));
      corpus[i].demands.push_back(std::move(dem));
    }
  }
  return corpus;
}

std::vector<Instance> sat_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n) {
  if (max_n < 3) throw std::invalid_argument("sat corpus needs max_n >= 3");
  return build_corpus(seed, count, [&](Rng& rng) {
    for (;;) {
      std::size_t a = rng.uniform(1, std::min<std::size_t>(6, max_n - 2));
      std::size_t b = rng.uniform(1, (max_n - a) / 2);
      double p = static_cast<double>(rng.uniform(10, 90)) / 100.0;
      SatInstance s = sat_random(a, b, p, rng.next());
      if (!has_ab_edge(s.graph, s.partition)) continue;
      Instance inst;
      inst.graph = std::move(s.graph);
      inst.partition = std::move(s.partition);
      return inst;
    }
  });
}

std::vector<Instance> cycle_free_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n) {
  return build_corpus(seed, count, [&](Rng& rng) {
    std::size_t n = rng.uniform(1, max_n);
    for (;;) {
      double p = static_cast<double>(rng.uniform(5, 50)) / 100.0;
      Graph g = gnp(n, p, rng);
      if (!is_free(g, kShortCycles)) continue;
      Instance inst;
      inst.graph = std::move(g);
      return inst;
    }
  });
}

std::vector<Instance> planted_corpus(std::uint64_t seed, std::size_t count) {
  return build_corpus(seed, count, [&](Rng& rng) {
    std::size_t outer = rng.uniform(2, 8);
    std::size_t inner = rng.uniform(2, 6);
    PlantedModule pm = planted_module(outer, inner, rng.next());
    Instance inst;
    inst.weights = random_weights(pm.graph.order(), 0, 100, rng);
    inst.graph = std::move(pm.graph);
    inst.module = std::move(pm.module);
    return inst;
  });
}

std::vector<Instance> default_corpus(Suite suite, std::uint64_t seed, std::size_t count) {
  switch (suite) {
    case Suite::Obs1:
    case Suite::Obs2:
    case Suite::Lemma1:
    case Suite::Lemma2: return sat_corpus(seed, count);
    case Suite::Thm1: return cycle_free_corpus(seed, count);
    case Suite::Solver:
    case Suite::TreeBounds: return mixed_corpus(seed, count);
    case Suite::Constrained: return with_random_demands(mixed_corpus(seed, count), seed);
    case Suite::Substitution: return planted_corpus(seed, count);
    case Suite::Lemma6: return {};
  }
  return {};
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit)
      if (mask >> bit & 1) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Lemma6Report check_lemma6(std::size_t max_n, Execution exec) {
  if (max_n > 11) throw std::invalid_argument("exhaustive enumeration supports at most 11 vertices");
  Lemma6Report r;
  r.max_n = max_n;
  for (std::size_t n = 1; n <= max_n && !r.counterexample; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    const auto masks = static_cast<std::int64_t>(1ULL << pairs);
    std::uint64_t classified = 0, failures = 0;
    std::int64_t first = masks;
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 4096) reduction(+ : classified, failures) reduction(min : first)
      for (std::int64_t m = 0; m < masks; ++m) {
        MaskVerdict v = examine_mask(n, static_cast<std::uint64_t>(m));
        classified += v.classified;
        if (v.failure) {
          ++failures;
          first = std::min(first, m);
        }
      }
    } else {
      for (std::int64_t m = 0; m < masks; ++m) {
        MaskVerdict v = examine_mask(n, static_cast<std::uint64_t>(m));
        classified += v.classified;
        if (v.failure) {
          ++failures;
          first = std::min(first, m);
        }
      }
    }
    r.graphs += static_cast<std::uint64_t>(masks);
    r.classified += classified;
    r.failures += failures;
    if (first < masks) r.counterexample = graph_from_mask(n, static_cast<std::uint64_t>(first));
  }
  return r;
}

}  // namespace idom
