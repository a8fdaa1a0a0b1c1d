#include "forge/coloring.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <stdexcept>
#include <unordered_map>

#include "forge/guards.hpp"

namespace forge {

namespace {

/// Backtracking over flat multi-word colour domains.
class ListSolver {
 public:
  ListSolver(std::vector<std::vector<int>> neighbors, std::size_t words)
      : nbrs_(std::move(neighbors)), words_(words), color_(nbrs_.size(), -1) {}

  /// dom holds n * words bits; on success color_of() gives palette indices.
  bool solve(std::vector<std::uint64_t>& dom) {
    dom_ = &dom;
    std::fill(color_.begin(), color_.end(), -1);
    trail_.clear();
    for (std::size_t v = 0; v < nbrs_.size(); ++v)
      if (size_of(v) == 0) return false;
    return search(nbrs_.size());
  }

  const std::vector<int>& color_of() const { return color_; }

 private:
  std::size_t size_of(std::size_t v) const {
    std::size_t s = 0;
    for (std::size_t w = 0; w < words_; ++w) s += static_cast<std::size_t>(std::popcount((*dom_)[v * words_ + w]));
    return s;
  }

  bool search(std::size_t remaining) {
    if (remaining == 0) return true;
    std::size_t best = nbrs_.size();
    std::size_t best_size = SIZE_MAX;
    for (std::size_t v = 0; v < nbrs_.size(); ++v) {
      if (color_[v] >= 0) continue;
      const std::size_t s = size_of(v);
      if (s < best_size) {
        best = v;
        best_size = s;
        if (s <= 1) break;
      }
    }
    if (best_size == 0) return false;
    const std::size_t v = best;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = (*dom_)[v * words_ + w];
      while (bits) {
        const int b = std::countr_zero(bits);
        bits &= bits - 1;
        const int c = static_cast<int>(w * 64) + b;
        const std::uint64_t mask = std::uint64_t{1} << b;
        color_[v] = c;
        const std::size_t mark = trail_.size();
        bool dead = false;
        for (const int u : nbrs_[v]) {
          const auto uu = static_cast<std::size_t>(u);
          if (color_[uu] >= 0) continue;
          auto& word = (*dom_)[uu * words_ + w];
          if (!(word & mask)) continue;
          word &= ~mask;
          trail_.push_back(uu);
          if (size_of(uu) == 0) {
            dead = true;
            break;
          }
        }
        if (!dead && search(remaining - 1)) return true;
        while (trail_.size() > mark) {
          (*dom_)[trail_.back() * words_ + w] |= mask;
          trail_.pop_back();
        }
        color_[v] = -1;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> nbrs_;
  std::size_t words_;
  std::vector<int> color_;
  std::vector<std::uint64_t>* dom_ = nullptr;
  std::vector<std::size_t> trail_;
};

std::vector<std::vector<int>> neighbor_lists(const Graph& g) {
  std::vector<std::vector<int>> out(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) out[v] = g.neighbors(static_cast<int>(v)).members();
  return out;
}

using Mask = std::uint64_t;

/// Colour-class enumeration on one candidate subgraph (relabelled 0..m-1).
class ClassEnumerator {
 public:
  ClassEnumerator(const Graph& h, std::size_t k) : m_(h.order()) {
    groups_.resize(m_);
    for (Mask s = 1; s < (Mask{1} << m_); ++s) {
      if (std::popcount(s) < 2) continue;
      bool isolated = false;
      for (Mask rest = s; rest && !isolated; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        isolated = !(h.row_mask(v) & s);
      }
      if (!isolated) groups_[static_cast<std::size_t>(std::countr_zero(s))].push_back(s);
    }
    demand_.assign(m_, static_cast<int>(k));
    solver_ = std::make_unique<ListSolver>(neighbor_lists(h), 1);
  }

  /// Colour classes of an uncolourable assignment, if any.
  std::optional<std::vector<Mask>> run() {
    if (descend(0, 0)) return chosen_;
    return std::nullopt;
  }

  std::uint64_t leaves() const { return leaves_; }

 private:
  bool descend(std::size_t group, std::size_t from) {
    while (group < m_ && demand_[group] == 0) {
      ++group;
      from = 0;
    }
    if (group == m_) return leaf();
    Mask open = 0;
    for (std::size_t v = 0; v < m_; ++v)
      if (demand_[v] > 0) open |= Mask{1} << v;
    const auto& options = groups_[group];
    for (std::size_t i = from; i < options.size(); ++i) {
      const Mask s = options[i];
      if (s & ~open) continue;
      for (Mask rest = s; rest; rest &= rest - 1) --demand_[static_cast<std::size_t>(std::countr_zero(rest))];
      chosen_.push_back(s);
      if (descend(group, i)) return true;
      chosen_.pop_back();
      for (Mask rest = s; rest; rest &= rest - 1) ++demand_[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    return false;
  }

  bool leaf() {
    ++leaves_;
    if (chosen_.size() > 64) throw std::logic_error("colour class count exceeds the solver word");
    std::vector<std::uint64_t> dom(m_, 0);
    for (std::size_t c = 0; c < chosen_.size(); ++c)
      for (Mask rest = chosen_[c]; rest; rest &= rest - 1)
        dom[static_cast<std::size_t>(std::countr_zero(rest))] |= std::uint64_t{1} << c;
    return !solver_->solve(dom);
  }

  std::size_t m_;
  std::vector<std::vector<Mask>> groups_;
  std::vector<int> demand_;
  std::vector<Mask> chosen_;
  std::unique_ptr<ListSolver> solver_;
  std::uint64_t leaves_ = 0;
};

/// Combinatorial Nullstellensatz test: some monomial with every exponent below
/// k survives in the product of (x_u - x_v) over the edges, which makes h
/// k-choosable. Monomials with an exponent >= k are dropped as they appear;
/// coefficients are sums of at most 2^e terms of ±1 and fit in 64 bits.
bool nullstellensatz_certifies(const Graph& h, std::size_t k) {
  const std::size_t n = h.order();
  const auto edges = h.edges();
  if (k == 0) return n == 0;
  if (edges.size() > n * (k - 1)) return false;
  std::vector<std::uint32_t> place(n, 1);
  for (std::size_t v = 1; v < n; ++v) place[v] = place[v - 1] * static_cast<std::uint32_t>(k);
  std::unordered_map<std::uint32_t, std::int64_t> poly{{0, 1}};
  for (auto [u, v] : edges) {
    std::unordered_map<std::uint32_t, std::int64_t> next;
    next.reserve(poly.size() * 2);
    for (const auto& [code, coeff] : poly) {
      const auto eu = (code / place[static_cast<std::size_t>(u)]) % k;
      const auto ev = (code / place[static_cast<std::size_t>(v)]) % k;
      if (eu + 1 < k) next[code + place[static_cast<std::size_t>(u)]] += coeff;
      if (ev + 1 < k) next[code + place[static_cast<std::size_t>(v)]] -= coeff;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    poly = std::move(next);
    if (poly.empty()) return false;
  }
  return true;
}

bool min_degree_at_least(const Graph& g, Mask s, std::size_t k) {
  for (Mask rest = s; rest; rest &= rest - 1)
    if (static_cast<std::size_t>(std::popcount(g.row_mask(std::countr_zero(rest)) & s)) < k) return false;
  return true;
}

}  // namespace

std::optional<Coloring> is_l_colorable(const Graph& g, const ListAssignment& lists) {
  if (lists.size() != g.order()) throw std::invalid_argument("list assignment does not cover the graph");
  const std::vector<int> palette = lists.palette();
  const std::size_t words = std::max<std::size_t>(1, (palette.size() + 63) / 64);
  std::vector<std::uint64_t> dom(g.order() * words, 0);
  for (std::size_t v = 0; v < g.order(); ++v)
    for (const int c : lists[v]) {
      const auto idx = static_cast<std::size_t>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin());
      dom[v * words + idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
  ListSolver solver(neighbor_lists(g), words);
  if (!solver.solve(dom)) return std::nullopt;
  Coloring out(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) out[v] = palette[static_cast<std::size_t>(solver.color_of()[v])];
  return out;
}

bool is_proper_list_coloring(const Graph& g, const ListAssignment& lists, const Coloring& c) {
  if (c.size() != g.order() || lists.size() != g.order()) return false;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (!lists.allows(v, c[v])) return false;
  for (auto [u, v] : g.edges())
    if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) return false;
  return true;
}

bool verify_choosability_witness(const Graph& g, const ListAssignment& lists, std::size_t k) {
  if (lists.size() != g.order()) return false;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (lists[v].size() < k) return false;
  return !is_l_colorable(g, lists).has_value();
}

std::size_t chromatic_number(const Graph& g) {
  std::size_t k = 0;
  while (!is_l_colorable(g, ListAssignment::first_k(g.order(), static_cast<int>(k)))) ++k;
  return k;
}

ChoosabilityResult decide_choosability(const Graph& g, std::size_t k, bool use_nullstellensatz) {
  enforce_guard("choosability order", g.order(), 8);
  const std::size_t n = g.order();
  ChoosabilityResult result;
  if (k == 0) {
    result.choosable = n == 0;
    if (!result.choosable) result.witness = ListAssignment(std::vector<std::vector<int>>(n));
    return result;
  }

  // candidates: induced subgraphs with minimum degree >= k, smallest first
  std::vector<Mask> candidates;
  for (Mask s = 1; s < (Mask{1} << n); ++s)
    if (static_cast<std::size_t>(std::popcount(s)) > k && min_degree_at_least(g, s, k) &&
        induces_connected(g, VertexSet::from_mask(n, s)))
      candidates.push_back(s);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });

  for (const Mask s : candidates) {
    const auto sub = induced_subgraph_with_map(g, VertexSet::from_mask(n, s));
    if (use_nullstellensatz && nullstellensatz_certifies(sub.graph, k)) continue;
    ClassEnumerator enumerator(sub.graph, k);
    const auto classes = enumerator.run();
    result.assignments_checked += enumerator.leaves();
    if (!classes) continue;

    std::vector<std::vector<int>> raw(n);
    for (std::size_t c = 0; c < classes->size(); ++c)
      for (Mask rest = (*classes)[c]; rest; rest &= rest - 1)
        raw[static_cast<std::size_t>(sub.original[static_cast<std::size_t>(std::countr_zero(rest))])].push_back(
            static_cast<int>(c));
    int fresh = static_cast<int>(classes->size());
    for (auto& l : raw)
      while (l.empty() || l.size() < k) l.push_back(fresh++);
    result.choosable = false;
    result.witness = ListAssignment(std::move(raw));
    if (!verify_choosability_witness(g, *result.witness, k))
      throw std::logic_error("choosability witness failed re-verification");
    return result;
  }
  return result;
}

std::size_t list_chromatic_number(const Graph& g) {
  enforce_guard("list chromatic number order", g.order(), 8);
  if (g.order() == 0) return 0;
  const std::size_t upper = degeneracy(g).value + 1;
  for (std::size_t k = chromatic_number(g); k < upper; ++k)
    if (decide_choosability(g, k).choosable) return k;
  return upper;
}

}  // namespace forge
