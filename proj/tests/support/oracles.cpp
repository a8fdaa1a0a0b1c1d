#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "forge/coloring.hpp"

namespace oracle {

namespace {

bool connected_after_removal(const Graph& g, std::uint32_t removed) {
  const int n = static_cast<int>(g.order());
  int start = -1;
  int remaining = 0;
  for (int v = 0; v < n; ++v)
    if (!((removed >> v) & 1u)) {
      ++remaining;
      if (start < 0) start = v;
    }
  if (remaining <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (((removed >> w) & 1u) || seen[static_cast<std::size_t>(w)] || !g.has_edge(v, w)) continue;
      seen[static_cast<std::size_t>(w)] = true;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == remaining;
}

}  // namespace

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng) < p) g.add_edge(static_cast<int>(u), static_cast<int>(v));
  return g;
}

bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  const int n = static_cast<int>(g.order());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (g.has_edge(u, v) != h.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
          ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::size_t connectivity(const Graph& g) {
  const int n = static_cast<int>(g.order());
  if (n <= 1) return 0;
  for (int size = 0; size <= n - 2; ++size) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != size) continue;
      if (!connected_after_removal(g, mask)) return static_cast<std::size_t>(size);
    }
  }
  return static_cast<std::size_t>(n - 1);
}

std::size_t degeneracy(const Graph& g) {
  const int n = static_cast<int>(g.order());
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::size_t low = g.order();
    for (int v = 0; v < n; ++v) {
      if (!((mask >> v) & 1u)) continue;
      std::size_t d = 0;
      for (int w = 0; w < n; ++w)
        if (((mask >> w) & 1u) && g.has_edge(v, w)) ++d;
      low = std::min(low, d);
    }
    best = std::max(best, low);
  }
  return best;
}

bool has_clique(const Graph& g, std::size_t k) {
  const int n = static_cast<int>(g.order());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (((mask >> u) & 1u) && ((mask >> v) & 1u) && !g.has_edge(u, v)) ok = false;
    if (ok) return true;
  }
  return false;
}

bool valid_coloring(const Graph& g, const forge::ListAssignment& lists, const forge::Coloring& c) {
  if (c.size() != g.order()) return false;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto& l = lists[v];
    if (std::find(l.begin(), l.end(), c[v]) == l.end()) return false;
  }
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (g.has_edge(static_cast<int>(u), static_cast<int>(v)) && c[u] == c[v]) return false;
  return true;
}

bool list_colorable(const Graph& g, const forge::ListAssignment& lists) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (lists[v].empty()) return false;
  while (true) {
    forge::Coloring c(n);
    for (std::size_t v = 0; v < n; ++v) c[v] = lists[v][idx[v]];
    if (valid_coloring(g, lists, c)) return true;
    std::size_t pos = 0;
    while (pos < n && ++idx[pos] == lists[pos].size()) idx[pos++] = 0;
    if (pos == n) return false;
  }
}

bool has_minor_by_labelings(const Graph& host, const Graph& pattern) {
  const int n = static_cast<int>(host.order());
  const int p = static_cast<int>(pattern.order());
  if (p == 0) return true;
  if (p > n) return false;
  std::vector<int> label(static_cast<std::size_t>(n), 0);  // 0 = unused, h+1 = branch set of h
  while (true) {
    std::vector<std::uint32_t> sets(static_cast<std::size_t>(p), 0);
    for (int v = 0; v < n; ++v)
      if (label[static_cast<std::size_t>(v)] > 0) sets[static_cast<std::size_t>(label[static_cast<std::size_t>(v)] - 1)] |= 1u << v;
    bool ok = true;
    for (int h = 0; h < p && ok; ++h) {
      const std::uint32_t s = sets[static_cast<std::size_t>(h)];
      if (s == 0) {
        ok = false;
        break;
      }
      // connectivity of host[s]
      const int start = std::countr_zero(s);
      std::uint32_t seen = 1u << start;
      std::uint32_t frontier = seen;
      while (frontier) {
        std::uint32_t grow = 0;
        for (int v = 0; v < n; ++v)
          if ((frontier >> v) & 1u)
            for (int w = 0; w < n; ++w)
              if (((s >> w) & 1u) && host.has_edge(v, w)) grow |= 1u << w;
        frontier = grow & ~seen;
        seen |= grow;
      }
      if (seen != s) ok = false;
    }
    for (int a = 0; a < p && ok; ++a)
      for (int b = a + 1; b < p && ok; ++b) {
        if (!pattern.has_edge(a, b)) continue;
        bool touch = false;
        for (int x = 0; x < n && !touch; ++x)
          for (int y = 0; y < n && !touch; ++y)
            if (((sets[static_cast<std::size_t>(a)] >> x) & 1u) && ((sets[static_cast<std::size_t>(b)] >> y) & 1u) &&
                host.has_edge(x, y))
              touch = true;
        if (!touch) ok = false;
      }
    if (ok) return true;
    int pos = 0;
    while (pos < n && ++label[static_cast<std::size_t>(pos)] == p + 1) label[static_cast<std::size_t>(pos++)] = 0;
    if (pos == n) return false;
  }
}

std::size_t chromatic_number(const Graph& g) {
  for (int k = 0;; ++k) {
    if (list_colorable(g, forge::ListAssignment::first_k(g.order(), k))) return static_cast<std::size_t>(k);
  }
}

bool choosable_by_enumeration(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  if (k == 0) return false;
  const int universe = static_cast<int>(k * n);
  std::vector<std::vector<int>> subsets;
  for (std::uint32_t mask = 0; mask < (1u << universe); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::vector<int> s;
    for (int c = 0; c < universe; ++c)
      if ((mask >> c) & 1u) s.push_back(c);
    subsets.push_back(s);
  }
  std::vector<int> first(k);
  std::iota(first.begin(), first.end(), 0);
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<std::vector<int>> raw(n);
    raw[0] = first;
    for (std::size_t v = 1; v < n; ++v) raw[v] = subsets[idx[v]];
    if (!list_colorable(g, forge::ListAssignment(raw))) return false;
    std::size_t pos = 1;
    while (pos < n && ++idx[pos] == subsets.size()) idx[pos++] = 0;
    if (pos >= n) return true;
  }
}

namespace {

std::size_t ceil_fraction(int num, int den, std::size_t n) {
  return (static_cast<std::size_t>(num) * n + static_cast<std::size_t>(den) - 1) / static_cast<std::size_t>(den);
}

// Odometer over labels[i] in [0, base).
bool next_labels(std::vector<int>& labels, int base) {
  for (auto& l : labels) {
    if (++l < base) return true;
    l = 0;
  }
  return false;
}

}  // namespace

bool property_P_violation(const forge::BipartiteGraph& g, const Graph& h, int num, int den, std::uint64_t s,
                          const std::vector<int>& xs, const std::vector<int>& ys,
                          const std::vector<std::vector<int>>& x_sets, const std::vector<std::vector<int>>& y_sets) {
  const std::size_t n = h.order();
  const std::size_t need = ceil_fraction(num, den, n);
  const std::size_t cap = static_cast<std::size_t>(den / num);
  if (xs.size() < need || ys.size() < need) return false;
  if (x_sets.size() != xs.size() || y_sets.size() != ys.size()) return false;
  std::vector<int> all = xs;
  all.insert(all.end(), ys.begin(), ys.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  std::uint64_t e = 0;
  for (int x : xs)
    for (int y : ys)
      if (h.has_edge(x, y)) ++e;
  if (e < s) return false;
  std::vector<int> used_a;
  for (const auto& set : x_sets) {
    if (set.size() > cap) return false;
    used_a.insert(used_a.end(), set.begin(), set.end());
  }
  std::vector<int> used_b;
  for (const auto& set : y_sets) {
    if (set.size() > cap) return false;
    used_b.insert(used_b.end(), set.begin(), set.end());
  }
  std::sort(used_a.begin(), used_a.end());
  std::sort(used_b.begin(), used_b.end());
  if (std::adjacent_find(used_a.begin(), used_a.end()) != used_a.end()) return false;
  if (std::adjacent_find(used_b.begin(), used_b.end()) != used_b.end()) return false;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (!h.has_edge(xs[i], ys[j])) continue;
      bool missing = false;
      for (int a : x_sets[i])
        for (int b : y_sets[j])
          if (!g.has_edge(a, b)) missing = true;
      if (!missing) return false;
    }
  return true;
}

bool property_P_holds(const forge::BipartiteGraph& g, const Graph& h, int num, int den, std::uint64_t s) {
  const std::size_t n = h.order();
  const std::size_t need = ceil_fraction(num, den, n);
  for (std::uint32_t sx = 0; sx < (1u << n); ++sx) {
    if (static_cast<std::size_t>(std::popcount(sx)) < need) continue;
    for (std::uint32_t sy = 0; sy < (1u << n); ++sy) {
      if ((sx & sy) || static_cast<std::size_t>(std::popcount(sy)) < need) continue;
      std::vector<int> xs;
      std::vector<int> ys;
      for (int v = 0; v < static_cast<int>(n); ++v) {
        if ((sx >> v) & 1u) xs.push_back(v);
        if ((sy >> v) & 1u) ys.push_back(v);
      }
      // label 0 = unused, i + 1 = member of set i
      std::vector<int> la(g.a_size(), 0);
      do {
        std::vector<int> lb(g.b_size(), 0);
        do {
          std::vector<std::vector<int>> x_sets(xs.size());
          std::vector<std::vector<int>> y_sets(ys.size());
          for (std::size_t a = 0; a < la.size(); ++a)
            if (la[a] > 0) x_sets[static_cast<std::size_t>(la[a] - 1)].push_back(static_cast<int>(a));
          for (std::size_t b = 0; b < lb.size(); ++b)
            if (lb[b] > 0) y_sets[static_cast<std::size_t>(lb[b] - 1)].push_back(static_cast<int>(b));
          if (property_P_violation(g, h, num, den, s, xs, ys, x_sets, y_sets)) return false;
        } while (next_labels(lb, static_cast<int>(ys.size()) + 1));
      } while (next_labels(la, static_cast<int>(xs.size()) + 1));
    }
  }
  return true;
}

std::optional<std::uint64_t> min_cross_edges(const Graph& h, std::size_t min_size) {
  const std::size_t n = h.order();
  std::vector<int> label(n, 0);  // 0 neither, 1 in A, 2 in B
  std::optional<std::uint64_t> best;
  do {
    const auto in_a = static_cast<std::size_t>(std::count(label.begin(), label.end(), 1));
    const auto in_b = static_cast<std::size_t>(std::count(label.begin(), label.end(), 2));
    if (in_a < min_size || in_b < min_size) continue;
    std::uint64_t e = 0;
    for (auto [u, v] : h.edges())
      if (label[static_cast<std::size_t>(u)] + label[static_cast<std::size_t>(v)] == 3) ++e;
    if (!best || e < *best) best = e;
  } while (next_labels(label, 3));
  return best;
}

bool pasting_ground_truth_colorable(const Graph& f, const std::vector<int>& a, const std::vector<int>& b) {
  const int universe = static_cast<int>(a.size() + b.size()) - 1;
  std::size_t copies = 1;
  for (std::size_t i = 0; i < a.size(); ++i) copies *= static_cast<std::size_t>(universe);
  const std::size_t order = a.size() + copies * b.size();
  Graph big(order);
  // A occupies 0..|A|-1; copy i puts B[j] at |A| + i|B| + j
  auto b_pos = [&](std::size_t copy, std::size_t j) { return static_cast<int>(a.size() + copy * b.size() + j); };
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (f.has_edge(a[i], a[j])) big.add_edge(static_cast<int>(i), static_cast<int>(j));
  std::vector<int> full(static_cast<std::size_t>(universe));
  std::iota(full.begin(), full.end(), 1);
  std::vector<std::vector<int>> lists(order, full);
  std::vector<int> map(a.size(), 1);  // odometer over A -> [1..N]
  for (std::size_t copy = 0; copy < copies; ++copy) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (std::size_t k = j + 1; k < b.size(); ++k)
        if (f.has_edge(b[j], b[k])) big.add_edge(b_pos(copy, j), b_pos(copy, k));
      auto& list = lists[static_cast<std::size_t>(b_pos(copy, j))];
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.has_edge(a[i], b[j]))
          big.add_edge(static_cast<int>(i), b_pos(copy, j));
        else
          list.erase(std::remove(list.begin(), list.end(), map[i]), list.end());
      }
    }
    for (auto& m : map) {
      if (++m <= universe) break;
      m = 1;
    }
  }
  return forge::is_l_colorable(big, forge::ListAssignment(lists)).has_value();
}

}  // namespace oracle
