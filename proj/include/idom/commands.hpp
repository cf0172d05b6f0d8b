#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "idom/graph.hpp"
#include "idom/io.hpp"
#include "idom/validate.hpp"

namespace idom {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitNotInClass = 3,
  kExitOracleBound = 4,
  kExitInvalidPartition = 5,
};

/// What a command writes: JSON or graph text on `out`, diagnostics on `err`.
struct CommandOutput {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Graph-file text, or DIMACS text when `dimacs` is set.
GraphFile load_input(const std::string& text, bool dimacs);

struct SolveOptions {
  std::string mode = "sound";  // sound | naive | oracle
  bool unit_weights = false;
  bool dimacs = false;
  std::optional<std::uint64_t> seed;
};

/// The record cmd_solve prints. Throws ParseError, NotInClass or OracleLimitExceeded.
ResultRecord solve_record(const std::string& input_text, const SolveOptions& opts);

CommandOutput cmd_solve(const std::string& input_text, const SolveOptions& opts);

struct ReduceOptions {
  enum class Kind { Wid, Gamma, Star } kind = Kind::Wid;
  Vertex a = 0, b = 0;
  std::optional<std::string> partition_text;
  bool dimacs = false;
};

/// The constructed graph in canonical graph-file form, followed by one
/// "# meta " comment line carrying JSON metadata.
CommandOutput cmd_reduce(const std::string& input_text, const ReduceOptions& opts);

CommandOutput cmd_tree(const std::string& input_text, bool dot, bool dimacs);

/// `cls` is p5cop5, sat or patterns.
CommandOutput cmd_recognize(const std::string& input_text, const std::string& cls, bool dimacs);

struct CheckOptions {
  std::string suite;
  std::optional<std::filesystem::path> manifest;
  Execution exec = Execution::Parallel;
  std::size_t lemma6_max_n = 7;
};

CommandOutput cmd_check(const CheckOptions& opts);

struct GenOptions {
  std::string suite;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::filesystem::path out_dir;
};

/// Writes one graph file per instance (plus partition files for sat corpora)
/// and manifest.json into out_dir; prints the manifest.
CommandOutput cmd_gen(const GenOptions& opts);

}  // namespace idom
