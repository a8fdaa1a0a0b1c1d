#include "forge/properties.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "forge/bounds.hpp"
#include "forge/errors.hpp"
#include "forge/random.hpp"

namespace forge {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

std::vector<int> members_of(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

/// Calls fn(mask) for every k-subset of `pool` in lexicographic order of the
/// member lists; stops when fn returns true.
template <typename Fn>
bool for_each_combination(Mask pool, std::size_t k, Fn&& fn) {
  const auto items = members_of(pool);
  if (k > items.size()) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Mask m = 0;
    for (auto i : idx) m |= bit(items[i]);
    if (fn(m)) return true;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == items.size() - k + pos - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_delta(const Rational& delta) {
  if (delta <= 0 || delta >= 1) throw std::domain_error("delta must lie in (0, 1), got " + to_string(delta));
}

void check_word(std::size_t n, const char* what) {
  if (n > 64) throw GuardError(std::string(what) + " needs at most 64 vertices");
}

std::size_t min_part(const Rational& delta, std::size_t n) {
  return static_cast<std::size_t>(std::max<std::int64_t>(1, ceil_to_int(delta * n)));
}

std::size_t max_set_size(const Rational& delta) { return static_cast<std::size_t>(floor_to_int(1 / delta)); }

std::vector<Mask> rows_of(const Graph& h) {
  std::vector<Mask> rows(h.order());
  for (std::size_t v = 0; v < h.order(); ++v) rows[v] = h.row_mask(static_cast<int>(v));
  return rows;
}

std::uint64_t cross_edges(const std::vector<Mask>& rows, Mask a, Mask b) {
  std::uint64_t e = 0;
  for (; a; a &= a - 1) e += static_cast<std::uint64_t>(std::popcount(rows[static_cast<std::size_t>(std::countr_zero(a))] & b));
  return e;
}

// Property P ----------------------------------------------------------------

/// Representative assignment for one vertex tuple.
class TupleSearch {
 public:
  TupleSearch(const BipartiteGraph& g, std::size_t cap) : cap_(cap), a_size_(g.a_size()), b_size_(g.b_size()) {
    joined_.resize(a_size_);
    for (std::size_t a = 0; a < a_size_; ++a) joined_[a] = g.row(static_cast<int>(a)).mask();
    all_a_ = a_size_ == 64 ? ~Mask{0} : bit(static_cast<int>(a_size_)) - 1;
    all_b_ = b_size_ == 64 ? ~Mask{0} : bit(static_cast<int>(b_size_)) - 1;
  }

  void reset(std::size_t k, std::size_t l, std::vector<std::pair<int, int>> edges) {
    edges_ = std::move(edges);
    x_.assign(k, 0);
    y_.assign(l, 0);
    owned_a_ = 0;
    owned_b_ = 0;
  }

  bool satisfied(int i, int j) const {
    for (Mask xs = x_[static_cast<std::size_t>(i)]; xs; xs &= xs - 1)
      if (y_[static_cast<std::size_t>(j)] & ~joined_[static_cast<std::size_t>(std::countr_zero(xs))]) return true;
    return false;
  }

  struct Option {
    int a;
    int b;
  };

  std::vector<Option> options(int i, int j) const {
    Mask cand_a = x_[static_cast<std::size_t>(i)];
    if (static_cast<std::size_t>(std::popcount(cand_a)) < cap_) cand_a |= all_a_ & ~owned_a_;
    Mask cand_b = y_[static_cast<std::size_t>(j)];
    if (static_cast<std::size_t>(std::popcount(cand_b)) < cap_) cand_b |= all_b_ & ~owned_b_;
    std::vector<Option> out;
    for (Mask as = cand_a; as; as &= as - 1) {
      const int a = std::countr_zero(as);
      for (Mask bs = cand_b & ~joined_[static_cast<std::size_t>(a)]; bs; bs &= bs - 1) out.push_back({a, std::countr_zero(bs)});
    }
    return out;
  }

  /// Returns what was newly added so the caller can undo it.
  std::pair<Mask, Mask> apply(int i, int j, Option o) {
    const Mask na = bit(o.a) & ~x_[static_cast<std::size_t>(i)];
    const Mask nb = bit(o.b) & ~y_[static_cast<std::size_t>(j)];
    x_[static_cast<std::size_t>(i)] |= na;
    y_[static_cast<std::size_t>(j)] |= nb;
    owned_a_ |= na;
    owned_b_ |= nb;
    return {na, nb};
  }

  void undo(int i, int j, std::pair<Mask, Mask> added) {
    x_[static_cast<std::size_t>(i)] &= ~added.first;
    y_[static_cast<std::size_t>(j)] &= ~added.second;
    owned_a_ &= ~added.first;
    owned_b_ &= ~added.second;
  }

  bool dfs(std::size_t e, std::uint64_t& nodes, std::uint64_t budget) {
    if (++nodes > budget) throw BudgetExhausted("property P search exceeded " + std::to_string(budget) + " nodes");
    if (e == edges_.size()) return true;
    const auto [i, j] = edges_[e];
    if (satisfied(i, j)) return dfs(e + 1, nodes, budget);
    for (const Option o : options(i, j)) {
      const auto added = apply(i, j, o);
      if (dfs(e + 1, nodes, budget)) return true;
      undo(i, j, added);
    }
    return false;
  }

  bool greedy(Rng& rng) {
    std::vector<std::size_t> order(edges_.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t t = order.size(); t > 1; --t) std::swap(order[t - 1], order[uniform_below(rng, t)]);
    for (const std::size_t e : order) {
      const auto [i, j] = edges_[e];
      if (satisfied(i, j)) continue;
      const auto opts = options(i, j);
      if (opts.empty()) return false;
      apply(i, j, opts[uniform_below(rng, opts.size())]);
    }
    return true;
  }

  PropertyPWitness witness(const std::vector<int>& xs, const std::vector<int>& ys) const {
    PropertyPWitness w{xs, ys, {}, {}};
    for (Mask m : x_) w.x_sets.push_back(VertexSet::from_mask(a_size_, m));
    for (Mask m : y_) w.y_sets.push_back(VertexSet::from_mask(b_size_, m));
    return w;
  }

 private:
  std::size_t cap_;
  std::size_t a_size_;
  std::size_t b_size_;
  std::vector<Mask> joined_;
  Mask all_a_ = 0;
  Mask all_b_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Mask> x_;
  std::vector<Mask> y_;
  Mask owned_a_ = 0;
  Mask owned_b_ = 0;
};

std::vector<std::pair<int, int>> tuple_edges(const Graph& h, const std::vector<int>& xs, const std::vector<int>& ys) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (h.has_edge(xs[i], ys[j])) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return out;
}

PropertyPReport exact_P(const BipartiteGraph& g, const Graph& h, const PropertyPParams& params, bool minimal_only,
                        std::uint64_t budget) {
  check_delta(params.delta);
  check_word(h.order(), "property P host");
  check_word(std::max(g.a_size(), g.b_size()), "property P bipartite part");
  const std::size_t n = h.order();
  PropertyPReport report;
  if (n == 0) return report;
  const std::size_t kmin = min_part(params.delta, n);
  const auto rows = rows_of(h);
  const Mask all = n == 64 ? ~Mask{0} : bit(static_cast<int>(n)) - 1;
  TupleSearch search(g, max_set_size(params.delta));
  std::uint64_t nodes = 0;

  for (std::size_t k = kmin; k + kmin <= n; ++k) {
    for (std::size_t l = kmin; k + l <= n; ++l) {
      if (minimal_only && (k != kmin || l != kmin)) continue;
      const bool found = for_each_combination(all, k, [&](Mask sx) {
        return for_each_combination(all & ~sx, l, [&](Mask sy) {
          if (cross_edges(rows, sx, sy) < params.s) return false;
          const auto xs = members_of(sx);
          const auto ys = members_of(sy);
          search.reset(k, l, tuple_edges(h, xs, ys));
          if (!search.dfs(0, nodes, budget)) return false;
          report.verdict = Verdict::fails;
          report.witness = search.witness(xs, ys);
          return true;
        });
      });
      if (found) {
        report.effort = nodes;
        if (!is_property_P_violation(g, h, params, *report.witness))
          throw std::logic_error("property P witness failed re-verification");
        return report;
      }
    }
  }
  report.effort = nodes;
  return report;
}

PropertyPReport falsify_P(const BipartiteGraph& g, const Graph& h, const PropertyPParams& params, const CheckMode& mode) {
  check_delta(params.delta);
  check_word(h.order(), "property P host");
  check_word(std::max(g.a_size(), g.b_size()), "property P bipartite part");
  const std::size_t n = h.order();
  PropertyPReport report;
  report.verdict = Verdict::inconclusive;
  const std::size_t kmin = min_part(params.delta, n);
  if (n == 0 || 2 * kmin > n) return report;
  Rng rng(mode.seed);
  TupleSearch search(g, max_set_size(params.delta));
  std::vector<int> perm(n);
  for (std::uint64_t trial = 0; trial < mode.budget; ++trial) {
    ++report.effort;
    const std::size_t k = kmin + uniform_below(rng, n - 2 * kmin + 1);
    const std::size_t l = kmin + uniform_below(rng, n - k - kmin + 1);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t t = n; t > 1; --t) std::swap(perm[t - 1], perm[uniform_below(rng, t)]);
    std::vector<int> xs(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<int> ys(perm.begin() + static_cast<std::ptrdiff_t>(k), perm.begin() + static_cast<std::ptrdiff_t>(k + l));
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    auto edges = tuple_edges(h, xs, ys);
    if (edges.size() < params.s) continue;
    search.reset(k, l, std::move(edges));
    if (!search.greedy(rng)) continue;
    report.verdict = Verdict::fails;
    report.witness = search.witness(xs, ys);
    if (!is_property_P_violation(g, h, params, *report.witness))
      throw std::logic_error("property P witness failed re-verification");
    return report;
  }
  return report;
}

// Property Q ----------------------------------------------------------------

void check_q_params(const PropertyQParams& params) {
  check_delta(params.delta);
  if (params.d <= 1) throw std::domain_error("D must exceed 1, got " + to_string(params.d));
}

}  // namespace

PropertyPReport check_property_P(const BipartiteGraph& g, const Graph& h, const PropertyPParams& params,
                                 const CheckMode& mode) {
  if (mode.kind == CheckMode::Kind::falsify) return falsify_P(g, h, params, mode);
  return exact_P(g, h, params, false, mode.budget);
}

PropertyPReport check_property_P_minimal(const BipartiteGraph& g, const Graph& h, const PropertyPParams& params,
                                         std::uint64_t budget) {
  return exact_P(g, h, params, true, budget);
}

PropertyPComparison compare_property_P_reductions(const BipartiteGraph& g, const Graph& h,
                                                  const PropertyPParams& params, std::uint64_t budget) {
  PropertyPComparison out;
  out.full = exact_P(g, h, params, false, budget);
  out.minimal = exact_P(g, h, params, true, budget);
  out.disagree = out.full.verdict != out.minimal.verdict;
  return out;
}

bool is_property_P_violation(const BipartiteGraph& g, const Graph& h, const PropertyPParams& params,
                             const PropertyPWitness& w) {
  const std::size_t n = h.order();
  const std::size_t k = w.xs.size();
  const std::size_t l = w.ys.size();
  if (w.x_sets.size() != k || w.y_sets.size() != l) return false;
  const Rational bound_k = params.delta * n;
  if (Rational(k) < bound_k || Rational(l) < bound_k) return false;
  // distinct vertices of H
  std::vector<bool> seen(n, false);
  for (const auto* list : {&w.xs, &w.ys})
    for (const int v : *list) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
    }
  std::uint64_t e = 0;
  for (const int x : w.xs)
    for (const int y : w.ys) e += h.has_edge(x, y) ? 1 : 0;
  if (e < params.s) return false;
  // pairwise disjoint, small, inside the right part
  const Rational cap = 1 / params.delta;
  VertexSet used_a(g.a_size());
  for (const auto& s : w.x_sets) {
    if (s.universe() != g.a_size() || Rational(s.count()) > cap || s.intersects(used_a)) return false;
    used_a |= s;
  }
  VertexSet used_b(g.b_size());
  for (const auto& s : w.y_sets) {
    if (s.universe() != g.b_size() || Rational(s.count()) > cap || s.intersects(used_b)) return false;
    used_b |= s;
  }
  // no H-edge may see a fully joined pair of sets
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      if (!h.has_edge(w.xs[i], w.ys[j])) continue;
      bool all_joined = true;
      w.x_sets[i].for_each([&](int a) {
        w.y_sets[j].for_each([&](int b) { all_joined = all_joined && g.has_edge(a, b); });
      });
      if (all_joined) return false;
    }
  return true;
}

std::uint64_t property_Q_threshold(const PropertyQParams& params, std::size_t n) {
  return ceil_n_log_n(params.d, n);
}

PropertyQReport check_property_Q(const Graph& h, const PropertyQParams& params, const CheckMode& mode) {
  check_q_params(params);
  check_word(h.order(), "property Q");
  const std::size_t n = h.order();
  PropertyQReport report;
  report.threshold = property_Q_threshold(params, n);
  if (n == 0) return report;
  const std::size_t k = min_part(params.delta, n);
  const auto rows = rows_of(h);
  if (mode.kind == CheckMode::Kind::falsify) {
    report.verdict = Verdict::inconclusive;
    if (2 * k > n) return report;
    Rng rng(mode.seed);
    std::vector<int> perm(n);
    for (std::uint64_t trial = 0; trial < mode.budget; ++trial) {
      ++report.effort;
      std::iota(perm.begin(), perm.end(), 0);
      for (std::size_t t = n; t > 1; --t) std::swap(perm[t - 1], perm[uniform_below(rng, t)]);
      Mask a = 0;
      Mask b = 0;
      for (std::size_t i = 0; i < k; ++i) {
        a |= bit(perm[i]);
        b |= bit(perm[k + i]);
      }
      const std::uint64_t e = cross_edges(rows, a, b);
      if (e < report.threshold) {
        report.verdict = Verdict::fails;
        report.witness = PropertyQWitness{VertexSet::from_mask(n, a), VertexSet::from_mask(n, b), e};
        return report;
      }
    }
    return report;
  }
  if (2 * k > n) return report;
  const Mask all = n == 64 ? ~Mask{0} : bit(static_cast<int>(n)) - 1;
  for_each_combination(all, k, [&](Mask a) {
    return for_each_combination(all & ~a, k, [&](Mask b) {
      ++report.effort;
      const std::uint64_t e = cross_edges(rows, a, b);
      if (e >= report.threshold) return false;
      report.verdict = Verdict::fails;
      report.witness = PropertyQWitness{VertexSet::from_mask(n, a), VertexSet::from_mask(n, b), e};
      return true;
    });
  });
  return report;
}

PropertyQReport check_property_Q_full(const Graph& h, const PropertyQParams& params) {
  check_q_params(params);
  check_word(h.order(), "property Q");
  const std::size_t n = h.order();
  PropertyQReport report;
  report.threshold = property_Q_threshold(params, n);
  if (n == 0) return report;
  const std::size_t k = min_part(params.delta, n);
  const auto rows = rows_of(h);
  const Mask all = n == 64 ? ~Mask{0} : bit(static_cast<int>(n)) - 1;
  for (std::size_t ka = k; ka + k <= n; ++ka)
    for (std::size_t kb = k; ka + kb <= n; ++kb) {
      const bool found = for_each_combination(all, ka, [&](Mask a) {
        return for_each_combination(all & ~a, kb, [&](Mask b) {
          ++report.effort;
          const std::uint64_t e = cross_edges(rows, a, b);
          if (e >= report.threshold) return false;
          report.verdict = Verdict::fails;
          report.witness = PropertyQWitness{VertexSet::from_mask(n, a), VertexSet::from_mask(n, b), e};
          return true;
        });
      });
      if (found) return report;
    }
  return report;
}

bool is_property_Q_violation(const Graph& h, const PropertyQParams& params, const PropertyQWitness& w) {
  const std::size_t n = h.order();
  if (w.a.universe() != n || w.b.universe() != n || w.a.intersects(w.b)) return false;
  const Rational bound = params.delta * n;
  if (Rational(w.a.count()) < bound || Rational(w.b.count()) < bound) return false;
  std::uint64_t e = 0;
  w.a.for_each([&](int u) { w.b.for_each([&](int v) { e += h.has_edge(u, v) ? 1 : 0; }); });
  return e == w.edges && e < property_Q_threshold(params, n);
}

}  // namespace forge
