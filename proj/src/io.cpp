#include "idom/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace idom {

namespace {

using nlohmann::json;

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

/// Non-blank lines whose first token does not start with `comment`.
std::vector<Line> tokenize(std::string_view text, char comment) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split_ws(text.substr(pos, end - pos));
    if (!tokens.empty() && tokens[0].front() != comment) out.push_back({number, std::move(tokens)});
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::uint64_t to_uint(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return v;
}

void expect_arity(const Line& l, std::size_t k) {
  if (l.tokens.size() != k) fail(l.number, "expected " + std::to_string(k) + " fields");
}

Graph build(std::size_t n, const std::vector<Edge>& edges, std::size_t line) {
  try {
    return Graph::from_edges(n, edges);
  } catch (const GraphError& e) {
    fail(line, e.what());
  }
}

}  // namespace

WeightedGraph GraphFile::weighted() const {
  if (!weights) throw ParseError("graph file has no weights section");
  return WeightedGraph(graph, *weights);
}

GraphFile parse_graph_file(std::string_view text) {
  auto lines = tokenize(text, '#');
  if (lines.empty()) throw ParseError("empty graph file");
  expect_arity(lines[0], 2);
  std::size_t n = to_uint(lines[0].tokens[0], lines[0].number);
  std::size_t m = to_uint(lines[0].tokens[1], lines[0].number);
  std::size_t i = 1;
  std::vector<Edge> edges;
  for (; i < lines.size() && lines[i].tokens[0] != "weights"; ++i) {
    expect_arity(lines[i], 2);
    auto u = to_uint(lines[i].tokens[0], lines[i].number);
    auto v = to_uint(lines[i].tokens[1], lines[i].number);
    if (u >= n || v >= n) fail(lines[i].number, "vertex id out of range");
    if (u == v) fail(lines[i].number, "self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (edges.size() != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  GraphFile out;
  out.graph = build(n, edges, lines[0].number);
  if (out.graph.edge_count() != m) throw ParseError("duplicate edge");
  if (i == lines.size()) return out;

  expect_arity(lines[i], 1);
  std::vector<Weight> w(n, 0);
  std::vector<bool> seen(n, false);
  std::size_t assigned = 0;
  for (++i; i < lines.size(); ++i) {
    expect_arity(lines[i], 2);
    auto v = to_uint(lines[i].tokens[0], lines[i].number);
    auto x = to_uint(lines[i].tokens[1], lines[i].number);
    if (v >= n) fail(lines[i].number, "vertex id out of range");
    if (seen[v]) fail(lines[i].number, "weight of vertex " + std::to_string(v) + " assigned twice");
    if (x > static_cast<std::uint64_t>(std::numeric_limits<Weight>::max())) fail(lines[i].number, "weight too large");
    seen[v] = true;
    w[v] = static_cast<Weight>(x);
    ++assigned;
  }
  if (assigned != n) throw ParseError("weights section assigns " + std::to_string(assigned) + " of " +
                                      std::to_string(n) + " vertices");
  out.weights = std::move(w);
  return out;
}

std::string emit_graph_file(const Graph& g, const std::vector<Weight>* weights) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  if (weights) {
    out += "weights\n";
    for (std::size_t v = 0; v < weights->size(); ++v)
      out += std::to_string(v) + " " + std::to_string((*weights)[v]) + "\n";
  }
  return out;
}

std::string emit_graph_file(const GraphFile& f) {
  return emit_graph_file(f.graph, f.weights ? &*f.weights : nullptr);
}

Graph parse_dimacs(std::string_view text) {
  auto lines = tokenize(text, 'c');
  if (lines.empty() || lines[0].tokens[0] != "p") throw ParseError("missing DIMACS problem line");
  expect_arity(lines[0], 4);
  std::size_t n = to_uint(lines[0].tokens[2], lines[0].number);
  std::size_t m = to_uint(lines[0].tokens[3], lines[0].number);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens[0] != "e") fail(l.number, "expected an 'e' line");
    expect_arity(l, 3);
    auto u = to_uint(l.tokens[1], l.number);
    auto v = to_uint(l.tokens[2], l.number);
    if (u == 0 || v == 0 || u > n || v > n) fail(l.number, "vertex id out of range");
    edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  if (edges.size() != m) throw ParseError("problem line declares " + std::to_string(m) + " edges");
  return build(n, edges, lines[0].number);
}

SatPartition parse_partition(std::string_view text, const Graph& g) {
  std::size_t n = g.order();
  VertexSet a(n), b(n);
  bool have_a = false, have_b = false;
  for (const auto& l : tokenize(text, '#')) {
    bool is_a = l.tokens[0] == "A";
    if (!is_a && l.tokens[0] != "B") fail(l.number, "expected a line starting with A or B");
    bool& have = is_a ? have_a : have_b;
    if (have) fail(l.number, "side listed twice");
    have = true;
    for (std::size_t k = 1; k < l.tokens.size(); ++k) {
      auto v = to_uint(l.tokens[k], l.number);
      if (v >= n) fail(l.number, "vertex id out of range");
      (is_a ? a : b).insert(static_cast<Vertex>(v));
    }
  }
  if (!have_a || !have_b) throw ParseError("partition needs both an A line and a B line");
  return SatPartition::make(g, std::move(a), std::move(b));
}

std::string emit_partition(const SatPartition& p) {
  std::string out = "A";
  for (Vertex v : p.a.to_vector()) out += " " + std::to_string(v);
  out += "\nB";
  for (Vertex v : p.b.to_vector()) out += " " + std::to_string(v);
  return out + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string ResultRecord::to_json() const {
  json j = {{"command", command}, {"input_hash", input_hash}, {"mode", mode},           {"value", value},
            {"witness", witness}, {"feasible", feasible},     {"runtime_ms", runtime_ms}};
  if (seed) j["seed"] = *seed;
  return j.dump();
}

ResultRecord ResultRecord::from_json(std::string_view text) {
  try {
    json j = json::parse(text);
    ResultRecord r;
    r.command = j.at("command").get<std::string>();
    r.input_hash = j.at("input_hash").get<std::string>();
    r.mode = j.at("mode").get<std::string>();
    r.value = j.at("value").get<Weight>();
    r.witness = j.at("witness").get<std::vector<Vertex>>();
    r.feasible = j.at("feasible").get<bool>();
    r.runtime_ms = j.at("runtime_ms").get<double>();
    if (j.contains("seed")) r.seed = j["seed"].get<std::uint64_t>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad result record: ") + e.what());
  }
}

std::string tree_to_dot(const DecompTree& t) {
  std::string out = "graph decomposition {\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& node = t.nodes[i];
    std::string label = to_string(node.kind) + "\\nV=" + std::to_string(node.graph.order());
    if (node.label)
      label += " (" + std::to_string(node.label->first) + "," + std::to_string(node.label->second) + ")";
    out += "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
  }
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    for (auto c : t.nodes[i].children) out += "  n" + std::to_string(i) + " -- n" + std::to_string(c) + ";\n";
  return out + "}\n";
}

std::string tree_to_json(const DecompTree& t) {
  json nodes = json::array();
  for (const auto& node : t.nodes) {
    json j = {{"kind", to_string(node.kind)}, {"vertices", node.to_root}, {"children", node.children}};
    if (node.label) j["label"] = {node.label->first, node.label->second};
    if (node.kind == NodeKind::Homogeneous) {
      j["module"] = lift(node.module, node.to_root, t.root_order).to_vector();
      j["representative"] = node.to_root[node.representative];
    }
    if (node.kind == NodeKind::Antineighborhood) j["branch_vertex"] = node.to_root[node.branch_vertex];
    nodes.push_back(std::move(j));
  }
  json j = {{"order", t.root_order}, {"internal_count", t.internal_count()}, {"nodes", std::move(nodes)}};
  return j.dump(2) + "\n";
}

std::string CorpusManifest::to_json() const {
  json entries_j = json::array();
  for (const auto& e : entries) {
    json j = {{"file", e.file}, {"hash", e.hash}, {"seed", e.seed}};
    if (e.partition) j["partition"] = *e.partition;
    entries_j.push_back(std::move(j));
  }
  json j = {{"generator", {{"kind", kind}, {"seed", seed}, {"count", count}}}, {"entries", std::move(entries_j)}};
  return j.dump(2) + "\n";
}

CorpusManifest CorpusManifest::from_json(std::string_view text) {
  try {
    json j = json::parse(text);
    CorpusManifest m;
    const auto& gen = j.at("generator");
    m.kind = gen.at("kind").get<std::string>();
    m.seed = gen.at("seed").get<std::uint64_t>();
    m.count = gen.at("count").get<std::size_t>();
    for (const auto& e : j.at("entries")) {
      ManifestEntry entry{e.at("file").get<std::string>(), e.at("hash").get<std::string>(),
                          e.at("seed").get<std::uint64_t>(), std::nullopt};
      if (e.contains("partition")) entry.partition = e["partition"].get<std::string>();
      m.entries.push_back(std::move(entry));
    }
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad manifest: ") + e.what());
  }
}

}  // namespace idom
