#include <algorithm>
#include <string>

#include "forge/errors.hpp"
#include "forge/graph.hpp"

namespace forge {

std::optional<Coloring> color_by_degeneracy(const Graph& g, const ListAssignment& lists) {
  if (lists.size() != g.order()) throw PreconditionError("list assignment does not cover the graph");
  const Degeneracy deg = degeneracy(g);
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (lists[v].size() < deg.value + 1) {
      throw PreconditionError("vertex " + std::to_string(v) + " has a list of size " +
                              std::to_string(lists[v].size()) + " but degeneracy + 1 = " +
                              std::to_string(deg.value + 1));
    }
  }
  Coloring color(g.order(), -1);
  for (auto it = deg.order.rbegin(); it != deg.order.rend(); ++it) {
    const int v = *it;
    std::vector<int> taken;
    g.neighbors(v).for_each([&](int w) {
      if (color[static_cast<std::size_t>(w)] >= 0) taken.push_back(color[static_cast<std::size_t>(w)]);
    });
    const auto& options = lists[static_cast<std::size_t>(v)];
    auto pick = std::find_if(options.begin(), options.end(), [&](int c) {
      return std::find(taken.begin(), taken.end(), c) == taken.end();
    });
    if (pick == options.end()) return std::nullopt;
    color[static_cast<std::size_t>(v)] = *pick;
  }
  return color;
}

}  // namespace forge
