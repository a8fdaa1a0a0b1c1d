#include "forge/vertex_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace forge {

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<int> members)
    : VertexSet(universe, std::span<const int>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const int> members)
    : VertexSet(universe) {
  for (int v : members) {
    if (v < 0 || static_cast<std::size_t>(v) >= universe) {
      throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                              std::to_string(universe));
    }
    set(v);
  }
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (universe % 64 != 0) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("from_mask needs a universe of at most 64");
  VertexSet s(universe);
  if (universe > 0) {
    const std::uint64_t keep = universe == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
    s.words_[0] = mask & keep;
  }
  return s;
}

void VertexSet::clear() {
  for (auto& w : words_) w = 0;
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

int VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
  return -1;
}

int VertexSet::next(int v) const {
  int start = v + 1;
  if (start < 0) start = 0;
  if (static_cast<std::size_t>(start) >= universe_) return -1;
  std::size_t w = static_cast<std::size_t>(start) >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (bits) return static_cast<int>(w * 64) + std::countr_zero(bits);
    if (++w >= words_.size()) return -1;
    bits = words_[w];
  }
}

bool VertexSet::intersects(const VertexSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
    if (words_[i] & ~o) return false;
  }
  return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.universe_ > universe_) throw std::invalid_argument("union with a set from a larger universe");
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::operator~() const { return full(universe_) - *this; }

bool VertexSet::lex_less(const VertexSet& other) const {
  int a = first();
  int b = other.first();
  while (a != -1 && b != -1) {
    if (a != b) return a < b;
    a = next(a);
    b = other.next(b);
  }
  return a == -1 && b != -1;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first_member = true;
  for_each([&](int v) {
    if (!first_member) os << ',';
    os << v;
    first_member = false;
  });
  os << '}';
  return os.str();
}

}  // namespace forge
