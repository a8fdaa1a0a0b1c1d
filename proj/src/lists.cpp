#include "forge/lists.hpp"

#include <algorithm>
#include <stdexcept>

namespace forge {

namespace {

std::vector<int> normalized(std::vector<int> colors) {
  for (int c : colors)
    if (c < 0) throw std::invalid_argument("colours must be non-negative");
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  return colors;
}

}  // namespace

ListAssignment::ListAssignment(std::vector<std::vector<int>> lists) : lists_(std::move(lists)) {
  for (auto& l : lists_) l = normalized(std::move(l));
}

ListAssignment ListAssignment::uniform(std::size_t n, const std::vector<int>& colors) {
  return ListAssignment(std::vector<std::vector<int>>(n, colors));
}

ListAssignment ListAssignment::first_k(std::size_t n, int k) {
  std::vector<int> colors(static_cast<std::size_t>(std::max(k, 0)));
  for (int c = 0; c < k; ++c) colors[static_cast<std::size_t>(c)] = c;
  return uniform(n, colors);
}

void ListAssignment::set(std::size_t v, std::vector<int> colors) { lists_.at(v) = normalized(std::move(colors)); }

bool ListAssignment::allows(std::size_t v, int color) const {
  return std::binary_search(lists_[v].begin(), lists_[v].end(), color);
}

std::size_t ListAssignment::min_list_size() const {
  std::size_t best = lists_.empty() ? 0 : lists_[0].size();
  for (const auto& l : lists_) best = std::min(best, l.size());
  return best;
}

std::vector<int> ListAssignment::palette() const {
  std::vector<int> all;
  for (const auto& l : lists_) all.insert(all.end(), l.begin(), l.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace forge
