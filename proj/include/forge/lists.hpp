#pragma once

#include <cstddef>
#include <vector>

namespace forge {

/// Per-vertex colour lists. Colours are small non-negative integers; each list
/// is kept sorted and duplicate-free.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::vector<std::vector<int>> lists);

  /// Every vertex gets the same list.
  static ListAssignment uniform(std::size_t n, const std::vector<int>& colors);
  /// Every vertex gets {0, ..., k-1}.
  static ListAssignment first_k(std::size_t n, int k);

  std::size_t size() const { return lists_.size(); }
  const std::vector<int>& operator[](std::size_t v) const { return lists_[v]; }
  void set(std::size_t v, std::vector<int> colors);

  bool allows(std::size_t v, int color) const;
  std::size_t min_list_size() const;
  /// Sorted distinct colours over all lists.
  std::vector<int> palette() const;

  const std::vector<std::vector<int>>& lists() const { return lists_; }

  bool operator==(const ListAssignment& other) const = default;

 private:
  std::vector<std::vector<int>> lists_;
};

/// color[v] is the colour of vertex v.
using Coloring = std::vector<int>;

}  // namespace forge
