#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "idom/decomposition.hpp"
#include "idom/graph.hpp"
#include "idom/satgraph.hpp"

namespace idom {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Plain-text graph: header "n m", m lines "u v" (0-indexed), then optionally
/// a line "weights" followed by n lines "v w". Lines starting with '#' are ignored.
struct GraphFile {
  Graph graph;
  std::optional<std::vector<Weight>> weights;

  WeightedGraph weighted() const;
  friend bool operator==(const GraphFile&, const GraphFile&) = default;
};

GraphFile parse_graph_file(std::string_view text);
/// Canonical form: sorted edges, weights in vertex order, no comments.
std::string emit_graph_file(const Graph& g, const std::vector<Weight>* weights = nullptr);
std::string emit_graph_file(const GraphFile& f);

/// DIMACS edge format: "p edge n m", "e u v" with 1-indexed endpoints, 'c' comments.
Graph parse_dimacs(std::string_view text);

/// Two lines "A ids..." and "B ids..."; '#' comments allowed.
SatPartition parse_partition(std::string_view text, const Graph& g);
std::string emit_partition(const SatPartition& p);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

struct ResultRecord {
  std::string command;
  std::string input_hash;
  std::string mode;
  Weight value = 0;
  std::vector<Vertex> witness;
  bool feasible = false;
  double runtime_ms = 0;
  std::optional<std::uint64_t> seed;

  /// Single-line JSON with keys in sorted order.
  std::string to_json() const;
  static ResultRecord from_json(std::string_view text);
};

std::string tree_to_dot(const DecompTree& t);
std::string tree_to_json(const DecompTree& t);

struct ManifestEntry {
  std::string file;
  std::string hash;
  std::uint64_t seed = 0;
  std::optional<std::string> partition;
};

/// Reproducible corpus description: generator settings plus one entry per file.
struct CorpusManifest {
  std::string kind;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::vector<ManifestEntry> entries;

  std::string to_json() const;
  static CorpusManifest from_json(std::string_view text);
};

}  // namespace idom
