#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace forge {

/// Fixed-universe bitset over the vertices 0..size()-1 of some graph.
///
/// Bits at or above size() are never set. Comparison is lexicographic on the
/// ascending member list, which is the order used wherever a search has to
/// report "the least" witness.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<int> members);
  VertexSet(std::size_t universe, std::span<const int> members);

  static VertexSet full(std::size_t universe);
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return universe_; }

  bool test(int v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }
  void set(int v) { words_[static_cast<std::size_t>(v) >> 6] |= bit(v); }
  void reset(int v) { words_[static_cast<std::size_t>(v) >> 6] &= ~bit(v); }
  void clear();

  std::size_t count() const;
  bool empty() const;
  bool any() const { return !empty(); }

  /// Smallest member, or -1.
  int first() const;
  /// Smallest member strictly greater than v, or -1.
  int next(int v) const;

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement within the universe.
  VertexSet operator~() const;

  bool operator==(const VertexSet& other) const = default;
  /// Lexicographic on ascending member lists.
  bool lex_less(const VertexSet& other) const;

  std::vector<int> members() const;
  /// Low 64 bits; only meaningful when universe() <= 64.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  std::string to_string() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        bits &= bits - 1;
        fn(static_cast<int>(w * 64 + static_cast<std::size_t>(b)));
      }
    }
  }

 private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace forge
