#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace idom {

using Vertex = std::uint32_t;

/// Fixed-universe bitset of vertex ids. The universe size is part of the value;
/// binary set operations require equal universes.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> ids) : VertexSet(universe) {
    for (Vertex v : ids) insert(v);
  }
  VertexSet(std::size_t universe, std::span<const Vertex> ids) : VertexSet(universe) {
    for (Vertex v : ids) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  /// Same members in a universe of at least the current size.
  VertexSet widened(std::size_t universe) const {
    VertexSet s(universe);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = words_[i];
    return s;
  }

  bool contains(Vertex v) const { return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U); }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or universe() when empty.
  Vertex first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
    return static_cast<Vertex>(universe_);
  }
  /// Smallest member greater than v, or universe() when none.
  Vertex next(Vertex v) const {
    std::size_t pos = static_cast<std::size_t>(v) + 1;
    if (pos >= universe_) return static_cast<Vertex>(universe_);
    std::size_t i = pos >> 6;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (pos & 63));
    while (true) {
      if (w) return static_cast<Vertex>(i * 64 + std::countr_zero(w));
      if (++i == words_.size()) return static_cast<Vertex>(universe_);
      w = words_[i];
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v = first(); v < universe_; v = next(v)) out.push_back(v);
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Total order on sets of one universe: a precedes b iff the smallest element
  /// of the symmetric difference lies in a. On antichains (e.g. families of
  /// maximal independent sets) this coincides with comparing sorted id lists.
  /// It is preserved under disjoint union with a common set.
  friend bool set_precedes(const VertexSet& a, const VertexSet& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff) return (a.words_[i] >> std::countr_zero(diff)) & 1U;
    }
    return false;
  }

 private:
  void trim() {
    if (universe_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace idom
