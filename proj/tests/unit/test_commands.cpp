#include <doctest.h>

#include <filesystem>

#include <json.hpp>

#include "idom/commands.hpp"
#include "idom/generators.hpp"
#include "idom/io.hpp"

using namespace idom;

namespace {

const std::string kBull = "5 5\n0 1\n1 2\n2 3\n1 4\n2 4\nweights\n0 1\n1 5\n2 5\n3 1\n4 100\n";

ResultRecord record_of(const CommandOutput& out) { return ResultRecord::from_json(out.out); }

std::string graph_section(const std::string& out) { return out.substr(0, out.find("# meta ")); }

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("idom_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("solve modes") {
  for (const char* mode : {"sound", "oracle"}) {
    CommandOutput out = cmd_solve(kBull, {mode});
    CHECK(out.exit_code == kExitOk);
    ResultRecord r = record_of(out);
    CHECK(r.value == 6);
    CHECK(r.mode == mode);
    CHECK(r.witness == std::vector<Vertex>{0, 2});
    CHECK(r.input_hash == fnv1a_hex(kBull));
  }
  CommandOutput naive = cmd_solve(kBull, {"naive"});
  CHECK(naive.exit_code == kExitOk);

  SolveOptions unit{"sound", true};
  CHECK(record_of(cmd_solve("3 3\n0 1\n1 2\n0 2\n", unit)).value == 1);
  CHECK(cmd_solve("3 3\n0 1\n1 2\n0 2\n", {"sound"}).exit_code == kExitUsage);
  CHECK(cmd_solve("p edge 3 2\ne 1 2\ne 2 3\n", {"sound", true, true}).exit_code == kExitOk);
}

TEST_CASE("solve witnesses re-verify against the input") {
  Rng rng(2);
  for (int i = 0; i < 40; ++i) {
    Graph g = substitution_instance(rng.uniform(1, 12), rng.next());
    auto w = random_weights(g.order(), 0, 9, rng);
    std::string text = emit_graph_file(g, &w);
    for (const char* mode : {"sound", "naive", "oracle"}) {
      ResultRecord r = record_of(cmd_solve(text, {mode}));
      GraphFile f = parse_graph_file(text);
      VertexSet s(f.graph.order(), std::span<const Vertex>(r.witness));
      CHECK(is_maximal_independent(f.graph, s));
    }
  }
}

TEST_CASE("solve exit codes") {
  CommandOutput c7 = cmd_solve("7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n0 6\n", {"sound", true});
  CHECK(c7.exit_code == kExitNotInClass);
  CHECK(c7.out.empty());
  CHECK(cmd_solve(emit_graph_file(edgeless(26)), {"oracle", true}).exit_code == kExitOracleBound);
  CHECK(cmd_solve("2 1\n0 0\n", {"sound", true}).exit_code == kExitUsage);
  CHECK(cmd_solve(kBull, {"fast"}).exit_code == kExitUsage);
}

TEST_CASE("records are deterministic apart from runtime") {
  SolveOptions opts{"sound", false, false, 42};
  ResultRecord a = solve_record(kBull, opts);
  ResultRecord b = solve_record(kBull, opts);
  a.runtime_ms = b.runtime_ms = 0;
  CHECK(a.to_json() == b.to_json());
  CHECK(a.seed == std::uint64_t{42});
}

TEST_CASE("reduce") {
  CommandOutput wid = cmd_reduce("4 3\n0 1\n1 2\n2 3\n", {});
  REQUIRE(wid.exit_code == kExitOk);
  GraphFile t = parse_graph_file(wid.out);
  CHECK(t.graph.order() == 12);
  CHECK(t.graph.edge_count() == 20);
  REQUIRE(t.weights);
  CHECK((*t.weights)[2] == 8);

  ReduceOptions gamma{ReduceOptions::Kind::Gamma, 0, 1, std::string("A 0\nB 1 2\n")};
  CommandOutput g = cmd_reduce("3 2\n0 1\n1 2\n", gamma);
  REQUIRE(g.exit_code == kExitOk);
  CHECK(parse_graph_file(g.out).graph == Graph::from_edges(6, {{3, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 5}, {3, 0}}));
  auto meta = nlohmann::json::parse(g.out.substr(g.out.find("# meta ") + 7));
  CHECK(meta["v"] == 3);
  CHECK(meta["partition"]["A"] == nlohmann::json({0, 3}));

  // No A-B edges: the graph section is reproduced byte for byte.
  const std::string two_k2 = "4 2\n0 1\n2 3\n";
  ReduceOptions star{ReduceOptions::Kind::Star, 0, 0, std::string("A\nB 0 1 2 3\n")};
  CommandOutput s = cmd_reduce(two_k2, star);
  REQUIRE(s.exit_code == kExitOk);
  CHECK(graph_section(s.out) == two_k2);

  ReduceOptions bad_edge{ReduceOptions::Kind::Gamma, 1, 2, std::string("A 0\nB 1 2\n")};
  CHECK(cmd_reduce("3 2\n0 1\n1 2\n", bad_edge).exit_code == kExitInvalidPartition);
  ReduceOptions bad_part{ReduceOptions::Kind::Star, 0, 0, std::string("A 0 1\nB 2\n")};
  CHECK(cmd_reduce("3 2\n0 1\n1 2\n", bad_part).exit_code == kExitInvalidPartition);
  ReduceOptions c5{ReduceOptions::Kind::Star};
  CHECK(cmd_reduce(emit_graph_file(cycle(5)), c5).exit_code == kExitInvalidPartition);
}

TEST_CASE("tree and recognize") {
  CommandOutput k5 = cmd_tree(emit_graph_file(complete(5)), true, false);
  CHECK(k5.exit_code == kExitOk);
  CHECK(k5.out.find("n0 [") != std::string::npos);
  CHECK(k5.out.find("n1") == std::string::npos);
  CHECK(cmd_tree(emit_graph_file(cycle(7)), false, false).exit_code == kExitNotInClass);

  std::string c5 = emit_graph_file(cycle(5));
  CHECK(cmd_recognize(c5, "sat", false).out == "not a sat-graph\n");
  CHECK(cmd_recognize(c5, "p5cop5", false).out == "(P5, co-P5)-free\n");
  CHECK(cmd_recognize(emit_graph_file(path(5)), "p5cop5", false).out == "contains P5 on 0 1 2 3 4\n");
  CHECK(cmd_recognize(emit_graph_file(named("DOMINO")), "sat", false).out == "sat-graph s=2\nA 2 3\nB 0 1 4 5\n");
  CHECK(cmd_recognize(emit_graph_file(named("SUN3")), "sat", false).out == "not a sat-graph\n");
  CHECK(cmd_recognize(c5, "patterns", false).out.find("C5: 0 1 2 3 4\n") != std::string::npos);
  CHECK(cmd_recognize(c5, "chordal", false).exit_code == kExitUsage);
}

TEST_CASE("gen and check") {
  auto dir = scratch_dir("lemma1");
  CommandOutput gen = cmd_gen({"lemma1", 5, 300, dir});
  REQUIRE(gen.exit_code == kExitOk);
  CorpusManifest m = CorpusManifest::from_json(read_file(dir / "manifest.json"));
  CHECK(m.entries.size() == 300);
  CHECK(m.entries[0].partition);

  CommandOutput check = cmd_check({"lemma1", dir / "manifest.json"});
  CHECK(check.exit_code == kExitOk);
  CHECK(check.out == "suite lemma1: 300/300 passed\n");
  CHECK(cmd_check({"obs2", dir / "manifest.json", Execution::Serial}).exit_code == kExitOk);

  // A second generation with the same seed is byte-identical.
  auto again = scratch_dir("lemma1_again");
  cmd_gen({"lemma1", 5, 300, again});
  CHECK(read_file(again / "manifest.json") == read_file(dir / "manifest.json"));

  CHECK(cmd_check({"lemma6", std::nullopt, Execution::Parallel, 5}).exit_code == kExitOk);
  CHECK(cmd_check({"bogus"}).exit_code == kExitUsage);
  CHECK(cmd_check({"solver"}).exit_code == kExitUsage);
  CHECK(cmd_gen({"constrained", 1, 1, dir}).exit_code == kExitUsage);
}

TEST_CASE("check reports failures with the instance") {
  auto dir = scratch_dir("failing");
  std::filesystem::create_directories(dir);
  // A C5 file in a sat corpus: no sat-partition exists.
  std::string text = emit_graph_file(cycle(5));
  write_file(dir / "g00000.txt", text);
  write_file(dir / "g00001.txt", emit_graph_file(complete(3)));
  CorpusManifest m{"obs2", 0, 2, {{"g00000.txt", fnv1a_hex(text), 0, std::nullopt},
                                  {"g00001.txt", fnv1a_hex(emit_graph_file(complete(3))), 0, std::nullopt}}};
  write_file(dir / "manifest.json", m.to_json());
  CommandOutput out = cmd_check({"obs2", dir / "manifest.json"});
  CHECK(out.exit_code == kExitCheckFailed);
  CHECK(out.out.find("suite obs2: 1/2 passed\n") == 0);
  CHECK(out.out.find("FAIL g00000.txt: exception: not a sat-graph\n# instance g00000.txt\n" + text) !=
        std::string::npos);

  // Tampered file: hash mismatch.
  write_file(dir / "g00001.txt", "3 0\n");
  CHECK(cmd_check({"solver", dir / "manifest.json"}).exit_code == kExitUsage);
}
