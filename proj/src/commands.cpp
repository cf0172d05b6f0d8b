#include "idom/commands.hpp"

#include <chrono>
#include <cstdio>

#include <json.hpp>

#include "idom/decomposition.hpp"
#include "idom/hardness.hpp"
#include "idom/oracle.hpp"
#include "idom/patterns.hpp"
#include "idom/satgraph.hpp"
#include "idom/solver.hpp"

namespace idom {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PartitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maps the library's exceptions onto exit codes.
template <class Body>
CommandOutput guarded(Body body) {
  CommandOutput out;
  try {
    body(out);
  } catch (const ParseError& e) {
    out = {kExitUsage, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const UsageError& e) {
    out = {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const NotInClass& e) {
    out = {kExitNotInClass, "", std::string("not (P5, co-P5)-free: ") + e.what() + "\n"};
  } catch (const OracleLimitExceeded& e) {
    out = {kExitOracleBound, "", std::string("oracle size bound: ") + e.what() + "\n"};
  } catch (const SatSearchLimitExceeded& e) {
    out = {kExitOracleBound, "", std::string("search size bound: ") + e.what() + "\n"};
  } catch (const PartitionError& e) {
    out = {kExitInvalidPartition, "", std::string("invalid partition: ") + e.what() + "\n"};
  }
  return out;
}

json partition_json(const SatPartition& p) { return {{"A", p.a.to_vector()}, {"B", p.b.to_vector()}}; }

json markers_json(const TransformMarkers& m) {
  json edges = json::array();
  for (auto [u, v] : m.beta_new_edges) edges.push_back({u, v});
  return {{"alpha_new", m.alpha_new.to_vector()}, {"beta_new", m.beta_new.to_vector()}, {"beta_new_edges", edges}};
}

SatPartition input_partition(const Graph& g, const std::optional<std::string>& text) {
  if (text) {
    SatPartition p = parse_partition(*text, g);
    SatVerdict v = verify_sat_partition(g, p.a, p.b);
    if (!v.ok()) throw PartitionError(v.detail);
    return p;
  }
  auto found = find_sat_partition(g);
  if (!found) throw PartitionError("no sat-partition exists");
  return *found;
}

std::string describe_occurrence(const Occurrence& occ) {
  std::string s;
  for (Vertex v : occ.vertices) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

std::string entry_name(std::size_t i, const char* ext) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "g%05zu.%s", i, ext);
  return buf;
}

}  // namespace

GraphFile load_input(const std::string& text, bool dimacs) {
  if (dimacs) return GraphFile{parse_dimacs(text), std::nullopt};
  return parse_graph_file(text);
}

ResultRecord solve_record(const std::string& input_text, const SolveOptions& opts) {
  GraphFile f = load_input(input_text, opts.dimacs);
  if (!f.weights && !opts.unit_weights) throw UsageError("input has no weights section; pass --unit-weights");
  WeightedGraph wg = opts.unit_weights ? WeightedGraph::unit(f.graph) : f.weighted();

  ResultRecord r;
  r.command = "solve";
  r.input_hash = fnv1a_hex(input_text);
  r.mode = opts.mode;
  r.seed = opts.seed;
  auto start = std::chrono::steady_clock::now();
  if (opts.mode == "sound") {
    Solution s = solve_wid(wg);
    r.value = s.weight;
    r.witness = s.vertices.to_vector();
    r.feasible = s.feasible;
  } else if (opts.mode == "naive") {
    NaiveResult n = solve_naive_eq1(wg);
    r.value = n.value;
    r.witness = n.witness.to_vector();
    r.feasible = n.witness_is_mis;
  } else if (opts.mode == "oracle") {
    OracleReport o = oracle_wid(wg);
    r.value = o.value;
    r.witness = o.witness.to_vector();
    r.feasible = true;
  } else {
    throw UsageError("unknown mode '" + opts.mode + "'");
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CommandOutput cmd_solve(const std::string& input_text, const SolveOptions& opts) {
  return guarded([&](CommandOutput& out) {
    ResultRecord r = solve_record(input_text, opts);
    out.out = r.to_json() + "\n";
    if (!r.feasible) {
      out.exit_code = kExitCheckFailed;
      out.err = "no feasible solution\n";
    }
  });
}

CommandOutput cmd_reduce(const std::string& input_text, const ReduceOptions& opts) {
  return guarded([&](CommandOutput& out) {
    GraphFile f = load_input(input_text, opts.dimacs);
    json meta;
    using Kind = ReduceOptions::Kind;
    if (opts.kind == Kind::Wid) {
      WidReduction r = build_wid_reduction(f.graph);
      out.out = emit_graph_file(r.target.graph(), &r.target.weights());
      json layers = json::array();
      for (const auto& l : r.layer_map) layers.push_back(l);
      meta = {{"kind", "wid"}, {"layer_map", layers}, {"partition", partition_json(r.claimed_partition)}};
    } else if (opts.kind == Kind::Gamma) {
      SatPartition p = input_partition(f.graph, opts.partition_text);
      std::size_t n = f.graph.order();
      if (opts.a >= n || opts.b >= n || !p.a.contains(opts.a) || !p.b.contains(opts.b) ||
          !f.graph.adjacent(opts.a, opts.b))
        throw PartitionError("(" + std::to_string(opts.a) + ", " + std::to_string(opts.b) + ") is not an A-B edge");
      GammaResult r = gamma_transform(f.graph, p, opts.a, opts.b);
      out.out = emit_graph_file(r.graph);
      meta = {{"kind", "gamma"},
              {"v", r.v},
              {"x", r.x},
              {"y", r.y},
              {"partition", partition_json(r.partition)},
              {"markers", markers_json(r.markers)}};
    } else {
      SatPartition p = input_partition(f.graph, opts.partition_text);
      StarResult r = star_transform(f.graph, p);
      out.out = emit_graph_file(r.graph);
      json edges = json::array();
      for (auto [a, b] : r.transformed) edges.push_back({a, b});
      meta = {{"kind", "star"},
              {"transformed", edges},
              {"partition", partition_json(r.partition)},
              {"markers", markers_json(r.markers)}};
    }
    out.out += "# meta " + meta.dump() + "\n";
  });
}

CommandOutput cmd_tree(const std::string& input_text, bool dot, bool dimacs) {
  return guarded([&](CommandOutput& out) {
    DecompTree t = build_tree(load_input(input_text, dimacs).graph);
    out.out = dot ? tree_to_dot(t) : tree_to_json(t);
  });
}

CommandOutput cmd_recognize(const std::string& input_text, const std::string& cls, bool dimacs) {
  return guarded([&](CommandOutput& out) {
    Graph g = load_input(input_text, dimacs).graph;
    if (cls == "p5cop5") {
      for (const auto& p : {kP5, kCoP5})
        if (auto occ = find_induced(g, p)) {
          out.out = "contains " + pattern_name(p) + " on " + describe_occurrence(*occ) + "\n";
          return;
        }
      out.out = "(P5, co-P5)-free\n";
    } else if (cls == "sat") {
      auto p = find_sat_partition(g);
      out.out = p ? "sat-graph s=" + std::to_string(p->s()) + "\n" + emit_partition(*p) : "not a sat-graph\n";
    } else if (cls == "patterns") {
      for (const auto& p : {kP5, kCoP5, kC3, kC4, kC5, kC6, kDomino, kSun3}) {
        auto occ = find_induced(g, p);
        out.out += pattern_name(p) + ": " + (occ ? describe_occurrence(*occ) : std::string("free")) + "\n";
      }
    } else {
      throw UsageError("unknown class '" + cls + "'");
    }
  });
}

CommandOutput cmd_check(const CheckOptions& opts) {
  return guarded([&](CommandOutput& out) {
    Suite suite;
    try {
      suite = parse_suite(opts.suite);
    } catch (const SuiteUsageError& e) {
      throw UsageError(e.what());
    }
    if (suite == Suite::Lemma6) {
      Lemma6Report r = check_lemma6(opts.lemma6_max_n, opts.exec);
      out.out = "lemma6 n<=" + std::to_string(r.max_n) + ": graphs " + std::to_string(r.graphs) + ", classified " +
                std::to_string(r.classified) + ", failures " + std::to_string(r.failures) + "\n";
      if (r.counterexample) out.out += "# counterexample\n" + emit_graph_file(*r.counterexample);
      out.exit_code = r.ok() ? kExitOk : kExitCheckFailed;
      return;
    }
    if (suite == Suite::Constrained || suite == Suite::Substitution)
      throw UsageError("suite '" + opts.suite + "' has no file corpus form");
    if (!opts.manifest) throw UsageError("--corpus is required for suite '" + opts.suite + "'");

    CorpusManifest m = CorpusManifest::from_json(read_file(*opts.manifest));
    auto dir = opts.manifest->parent_path();
    std::vector<Instance> corpus;
    std::vector<std::string> texts;
    for (const auto& e : m.entries) {
      std::string text = read_file(dir / e.file);
      if (fnv1a_hex(text) != e.hash) throw ParseError(e.file + ": hash does not match the manifest");
      GraphFile f = parse_graph_file(text);
      Instance inst;
      inst.graph = f.graph;
      inst.weights = f.weights;
      inst.seed = e.seed;
      if (e.partition) inst.partition = parse_partition(read_file(dir / *e.partition), f.graph);
      corpus.push_back(std::move(inst));
      texts.push_back(std::move(text));
    }
    SuiteReport r;
    try {
      r = run_suite(suite, corpus, opts.exec);
    } catch (const SuiteUsageError& e) {
      throw UsageError(e.what());
    }
    out.out = "suite " + suite_name(suite) + ": " + std::to_string(r.passed) + "/" + std::to_string(r.total) +
              " passed\n";
    for (const auto& fail : r.failures) {
      const auto& name = m.entries[fail.index].file;
      out.out += "FAIL " + name + ": " + fail.detail + "\n# instance " + name + "\n" + texts[fail.index];
    }
    out.exit_code = r.ok() ? kExitOk : kExitCheckFailed;
  });
}

CommandOutput cmd_gen(const GenOptions& opts) {
  return guarded([&](CommandOutput& out) {
    Suite suite;
    try {
      suite = parse_suite(opts.suite);
    } catch (const SuiteUsageError& e) {
      throw UsageError(e.what());
    }
    if (suite == Suite::Lemma6 || suite == Suite::Constrained || suite == Suite::Substitution)
      throw UsageError("suite '" + opts.suite + "' has no file corpus form");
    std::filesystem::create_directories(opts.out_dir);
    std::vector<Instance> corpus = default_corpus(suite, opts.seed, opts.count);
    CorpusManifest m{suite_name(suite), opts.seed, opts.count, {}};
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& inst = corpus[i];
      std::string text = emit_graph_file(inst.graph, inst.weights ? &*inst.weights : nullptr);
      ManifestEntry e{entry_name(i, "txt"), fnv1a_hex(text), inst.seed, std::nullopt};
      write_file(opts.out_dir / e.file, text);
      if (inst.partition) {
        e.partition = entry_name(i, "part");
        write_file(opts.out_dir / *e.partition, emit_partition(*inst.partition));
      }
      m.entries.push_back(std::move(e));
    }
    std::string manifest = m.to_json();
    write_file(opts.out_dir / "manifest.json", manifest);
    out.out = manifest;
  });
}

}  // namespace idom
