#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "idom/commands.hpp"
#include "idom/io.hpp"

namespace {

int emit(const idom::CommandOutput& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

std::optional<std::string> read_input(const std::string& path, idom::CommandOutput& failure) {
  try {
    return idom::read_file(path);
  } catch (const idom::ParseError& e) {
    failure = {idom::kExitUsage, "", std::string("error: ") + e.what() + "\n"};
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independent domination toolkit for (P5, co-P5)-free graphs"};
  app.require_subcommand(1);

  std::string file;
  bool dimacs = false;

  idom::SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Minimum-weight independent dominating set");
  solve_cmd->add_option("file", file, "Graph file")->required();
  solve_cmd->add_option("--mode", solve.mode, "sound, naive or oracle")
      ->check(CLI::IsMember({"sound", "naive", "oracle"}));
  solve_cmd->add_flag("--unit-weights", solve.unit_weights, "Ignore weights and use 1 for every vertex");
  solve_cmd->add_option("--seed", solve.seed, "Seed echoed into the result record");
  solve_cmd->add_flag("--dimacs", dimacs, "Read DIMACS edge format (1-indexed)");

  idom::ReduceOptions reduce;
  std::string partition_file;
  std::vector<idom::Vertex> gamma_edge;
  bool wid = false, star = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build a reduction or transformation instance");
  reduce_cmd->add_option("file", file, "Graph file")->required();
  auto* wid_opt = reduce_cmd->add_flag("--wid", wid, "Three-layer weighted instance");
  auto* gamma_opt = reduce_cmd->add_option("--gamma", gamma_edge, "Transform the A-B edge (a, b)")->expected(2);
  auto* star_opt = reduce_cmd->add_flag("--star", star, "Transform every A-B edge");
  wid_opt->excludes(gamma_opt)->excludes(star_opt);
  gamma_opt->excludes(star_opt);
  reduce_cmd->add_option("--partition", partition_file, "Partition file with lines 'A ids' and 'B ids'");
  reduce_cmd->add_flag("--dimacs", dimacs, "Read DIMACS edge format (1-indexed)");

  bool dot = false, json_out = false;
  auto* tree_cmd = app.add_subcommand("tree", "Export the decomposition tree");
  tree_cmd->add_option("file", file, "Graph file")->required();
  auto* dot_opt = tree_cmd->add_flag("--dot", dot, "Graphviz output");
  tree_cmd->add_flag("--json", json_out, "JSON output (default)")->excludes(dot_opt);
  tree_cmd->add_flag("--dimacs", dimacs, "Read DIMACS edge format (1-indexed)");

  std::string cls;
  auto* rec_cmd = app.add_subcommand("recognize", "Class membership report");
  rec_cmd->add_option("file", file, "Graph file")->required();
  rec_cmd->add_option("--class", cls, "p5cop5, sat or patterns")
      ->required()
      ->check(CLI::IsMember({"p5cop5", "sat", "patterns"}));
  rec_cmd->add_flag("--dimacs", dimacs, "Read DIMACS edge format (1-indexed)");

  idom::CheckOptions check;
  std::string corpus;
  bool serial = false;
  auto* check_cmd = app.add_subcommand("check", "Validate a corpus against a claim");
  check_cmd->add_option("--suite", check.suite, "obs1, obs2, lemma1, lemma2, thm1, lemma6, solver or tree")
      ->required();
  check_cmd->add_option("--corpus", corpus, "Corpus manifest");
  check_cmd->add_option("--max-n", check.lemma6_max_n, "Largest order enumerated by lemma6")
      ->check(CLI::Range(1, 11));
  check_cmd->add_flag("--serial", serial, "Use the serial reference implementation");

  idom::GenOptions gen;
  std::string out_dir;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded corpus and its manifest");
  gen_cmd->add_option("--suite", gen.suite, "Suite the corpus is for")->required();
  gen_cmd->add_option("--seed", gen.seed, "Corpus seed");
  gen_cmd->add_option("--count", gen.count, "Number of instances");
  gen_cmd->add_option("--out", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : idom::kExitUsage;
  }

  try {
    idom::CommandOutput failure;
    if (*solve_cmd) {
      solve.dimacs = dimacs;
      auto text = read_input(file, failure);
      return emit(text ? idom::cmd_solve(*text, solve) : failure);
    }
    if (*reduce_cmd) {
      if (!wid && gamma_edge.empty() && !star) {
        std::cerr << "error: one of --wid, --gamma or --star is required\n";
        return idom::kExitUsage;
      }
      reduce.kind = wid ? idom::ReduceOptions::Kind::Wid
                        : star ? idom::ReduceOptions::Kind::Star : idom::ReduceOptions::Kind::Gamma;
      if (!gamma_edge.empty()) {
        reduce.a = gamma_edge[0];
        reduce.b = gamma_edge[1];
      }
      reduce.dimacs = dimacs;
      if (!partition_file.empty()) {
        auto part = read_input(partition_file, failure);
        if (!part) return emit(failure);
        reduce.partition_text = *part;
      }
      auto text = read_input(file, failure);
      return emit(text ? idom::cmd_reduce(*text, reduce) : failure);
    }
    if (*tree_cmd) {
      auto text = read_input(file, failure);
      return emit(text ? idom::cmd_tree(*text, dot, dimacs) : failure);
    }
    if (*rec_cmd) {
      auto text = read_input(file, failure);
      return emit(text ? idom::cmd_recognize(*text, cls, dimacs) : failure);
    }
    if (*check_cmd) {
      if (!corpus.empty()) check.manifest = corpus;
      check.exec = serial ? idom::Execution::Serial : idom::Execution::Parallel;
      return emit(idom::cmd_check(check));
    }
    if (*gen_cmd) {
      gen.out_dir = out_dir;
      return emit(idom::cmd_gen(gen));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return idom::kExitCheckFailed;
  }
  return idom::kExitUsage;
}
