#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idom/graph.hpp"

namespace idom {

enum class PatternKind { P5, CoP5, C3, C4, C5, C6, Domino, Sun3, CycleAtLeast };

struct PatternId {
  PatternKind kind = PatternKind::P5;
  /// Minimum cycle length; only meaningful for CycleAtLeast.
  std::size_t min_length = 0;

  static PatternId cycle_at_least(std::size_t k) { return {PatternKind::CycleAtLeast, k}; }
  friend bool operator==(const PatternId&, const PatternId&) = default;
};

inline constexpr PatternId kP5{PatternKind::P5};
inline constexpr PatternId kCoP5{PatternKind::CoP5};
inline constexpr PatternId kC3{PatternKind::C3};
inline constexpr PatternId kC4{PatternKind::C4};
inline constexpr PatternId kC5{PatternKind::C5};
inline constexpr PatternId kC6{PatternKind::C6};
inline constexpr PatternId kDomino{PatternKind::Domino};
inline constexpr PatternId kSun3{PatternKind::Sun3};

/// Canonical name: "P5", "CO_P5", "C4", "DOMINO", "SUN3", "CYCLE_GE5", ...
std::string pattern_name(PatternId p);
/// Inverse of pattern_name (case-insensitive). Throws std::invalid_argument.
PatternId parse_pattern(std::string_view name);

/// The fixed pattern graph. Domino and Sun3 use the figure labels shifted to
/// 0-based ids. Throws std::invalid_argument for CycleAtLeast.
const Graph& pattern_graph(PatternId p);

/// `vertices[i]` is the host vertex playing pattern vertex i. For cycle
/// searches the vertices are listed in cycle order.
struct Occurrence {
  PatternId pattern;
  std::vector<Vertex> vertices;
};

/// Lexicographically smallest occurrence (by the vertex tuple), or none.
std::optional<Occurrence> find_induced(const Graph& g, PatternId p);

/// Calls `visit` for every occurrence of a fixed pattern in lexicographic
/// tuple order; automorphic images are reported separately. Stops early when
/// `visit` returns false.
void for_each_induced(const Graph& g, PatternId p, const std::function<bool(const Occurrence&)>& visit);

bool is_free(const Graph& g, const std::vector<PatternId>& patterns);

/// Checks edges and non-edges of the occurrence against its pattern.
bool verify_occurrence(const Graph& g, const Occurrence& occ);

bool is_antisimplicial(const Graph& g, Vertex v);
std::optional<Vertex> find_antisimplicial(const Graph& g);

bool is_c5(const Graph& g);

}  // namespace idom
