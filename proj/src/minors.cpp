#include "forge/minors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "forge/errors.hpp"
#include "forge/guards.hpp"
#include "forge/named_graphs.hpp"

namespace forge {

std::vector<int> MinorModel::domain() const {
  std::vector<int> out;
  out.reserve(branch_sets.size());
  for (const auto& [h, z] : branch_sets) out.push_back(h);
  return out;
}

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) adj[v] = g.row_mask(static_cast<int>(v));
  return adj;
}

Mask neighborhood(const std::vector<Mask>& adj, Mask s) {
  Mask out = 0;
  while (s) {
    out |= adj[static_cast<std::size_t>(std::countr_zero(s))];
    s &= s - 1;
  }
  return out;
}

/// Component of `within` containing the lowest vertex of `seed`.
Mask reach(const std::vector<Mask>& adj, Mask seed, Mask within) {
  Mask seen = seed & (~seed + 1);
  Mask frontier = seen;
  while (frontier) {
    const Mask grow = neighborhood(adj, frontier) & within & ~seen;
    seen |= grow;
    frontier = grow;
  }
  return seen;
}

ModelCheck fail(std::string invariant, std::string detail) {
  ModelCheck c;
  c.valid = false;
  c.failed_invariant = std::move(invariant);
  c.detail = std::move(detail);
  return c;
}

ModelCheck verify_impl(const Graph& host, const Graph& pattern, const MinorModel& model, bool require_coverage) {
  const int p = static_cast<int>(pattern.order());
  for (const auto& [h, z] : model.branch_sets) {
    if (h < 0 || h >= p) {
      auto c = fail("range", "pattern vertex " + std::to_string(h) + " out of range");
      c.pattern_vertex = h;
      return c;
    }
    if (z.universe() != host.order()) {
      auto c = fail("range", "branch set of " + std::to_string(h) + " is over the wrong universe");
      c.pattern_vertex = h;
      return c;
    }
  }
  if (require_coverage) {
    for (int h = 0; h < p; ++h) {
      if (!model.branch_sets.count(h)) {
        auto c = fail("coverage", "pattern vertex " + std::to_string(h) + " has no branch set");
        c.pattern_vertex = h;
        return c;
      }
    }
  }
  VertexSet used(host.order());
  for (const auto& [h, z] : model.branch_sets) {
    if (z.empty()) {
      auto c = fail("empty", "branch set of " + std::to_string(h) + " is empty");
      c.pattern_vertex = h;
      return c;
    }
    if (z.intersects(used)) {
      auto c = fail("disjoint", "branch set of " + std::to_string(h) + " overlaps an earlier one");
      c.pattern_vertex = h;
      return c;
    }
    used |= z;
  }
  for (const auto& [h, z] : model.branch_sets) {
    if (!induces_connected(host, z)) {
      auto c = fail("connectivity", "branch set of " + std::to_string(h) + " " + z.to_string() + " is disconnected");
      c.pattern_vertex = h;
      return c;
    }
  }
  for (auto [a, b] : pattern.edges()) {
    const auto za = model.branch_sets.find(a);
    const auto zb = model.branch_sets.find(b);
    if (za == model.branch_sets.end() || zb == model.branch_sets.end()) continue;
    bool touch = false;
    za->second.for_each([&](int v) { touch = touch || host.neighbors(v).intersects(zb->second); });
    if (!touch) {
      auto c = fail("edge", "no host edge between the branch sets of " + std::to_string(a) + " and " +
                                std::to_string(b));
      c.pattern_edge = {a, b};
      return c;
    }
  }
  return {};
}

// Labelling search ----------------------------------------------------------

class LabelSearch {
 public:
  LabelSearch(const Graph& host, const Graph& pattern, MinorSearchStats* stats)
      : p_(static_cast<int>(pattern.order())), hadj_(adjacency_masks(host)), stats_(stats) {
    padj_ = adjacency_masks(pattern);
    order_.resize(static_cast<std::size_t>(p_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });

    // a twin may only start once the previous member of its class has
    twin_prev_.assign(static_cast<std::size_t>(p_), -1);
    std::vector<int> last_in_class(static_cast<std::size_t>(p_), -1);
    std::vector<int> class_of(static_cast<std::size_t>(p_), -1);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const int a = order_[i];
      for (std::size_t j = 0; j < i; ++j) {
        const int b = order_[j];
        const Mask na = padj_[static_cast<std::size_t>(a)] & ~bit(b);
        const Mask nb = padj_[static_cast<std::size_t>(b)] & ~bit(a);
        if (na == nb) {
          const int cls = class_of[static_cast<std::size_t>(b)];
          class_of[static_cast<std::size_t>(a)] = cls;
          twin_prev_[static_cast<std::size_t>(a)] = last_in_class[static_cast<std::size_t>(cls)];
          last_in_class[static_cast<std::size_t>(cls)] = a;
          break;
        }
      }
      if (class_of[static_cast<std::size_t>(a)] < 0) {
        class_of[static_cast<std::size_t>(a)] = a;
        last_in_class[static_cast<std::size_t>(a)] = a;
      }
    }
    pattern_edges_ = pattern.edges();

    for (const auto& comp : connected_components(host)) {
      std::vector<int> seq;
      Mask seen = bit(comp.first());
      seq.push_back(comp.first());
      for (std::size_t k = 0; k < seq.size(); ++k) {
        Mask fresh = hadj_[static_cast<std::size_t>(seq[k])] & ~seen;
        seen |= fresh;
        while (fresh) {
          seq.push_back(std::countr_zero(fresh));
          fresh &= fresh - 1;
        }
      }
      components_.push_back(seq);
      component_masks_.push_back(seen);
    }
    unassigned_ = host.order() == 64 ? ~Mask{0} : bit(static_cast<int>(host.order())) - 1;
    z_.assign(static_cast<std::size_t>(p_), 0);
    reach_.assign(static_cast<std::size_t>(p_), 0);
  }

  std::optional<std::vector<Mask>> run() {
    if (component(0)) return z_;
    return std::nullopt;
  }

 private:
  bool component(std::size_t ci) {
    if (ci == components_.size()) return finalize();
    if (place(ci, 0)) return true;
    const Mask saved = unassigned_;
    unassigned_ &= ~component_masks_[ci];
    const bool found = feasible() && component(ci + 1);
    if (!found) unassigned_ = saved;
    return found;
  }

  bool place(std::size_t ci, std::size_t k) {
    const auto& seq = components_[ci];
    if (k == seq.size()) return component(ci + 1);
    const int v = seq[k];
    unassigned_ &= ~bit(v);
    for (const int h : order_) {
      auto& zh = z_[static_cast<std::size_t>(h)];
      if (zh == 0) {
        const int prev = twin_prev_[static_cast<std::size_t>(h)];
        if (prev >= 0 && z_[static_cast<std::size_t>(prev)] == 0) continue;
        ++started_;
      }
      zh |= bit(v);
      if (feasible() && place(ci, k + 1)) return true;
      zh &= ~bit(v);
      if (zh == 0) --started_;
    }
    unassigned_ |= bit(v);
    return false;
  }

  bool feasible() {
    if (stats_) ++stats_->nodes;
    if (p_ - started_ > std::popcount(unassigned_)) return false;
    for (int h = 0; h < p_; ++h) {
      const Mask zh = z_[static_cast<std::size_t>(h)];
      if (!zh) continue;
      const Mask r = reach(hadj_, zh, zh | unassigned_);
      if (zh & ~r) return false;
      reach_[static_cast<std::size_t>(h)] = r | neighborhood(hadj_, r);
    }
    for (auto [a, b] : pattern_edges_) {
      const Mask za = z_[static_cast<std::size_t>(a)];
      const Mask zb = z_[static_cast<std::size_t>(b)];
      if (za && zb) {
        if (!(reach_[static_cast<std::size_t>(a)] & (zb | (reach_[static_cast<std::size_t>(b)] & unassigned_))))
          return false;
      } else if (za || zb) {
        const int s = za ? a : b;
        if (!(reach_[static_cast<std::size_t>(s)] & unassigned_)) return false;
      }
    }
    return true;
  }

  bool finalize() {
    if (started_ != p_) return false;
    for (auto [a, b] : pattern_edges_)
      if (!(neighborhood(hadj_, z_[static_cast<std::size_t>(a)]) & z_[static_cast<std::size_t>(b)])) return false;
    return true;
  }

  int p_;
  std::vector<Mask> hadj_;
  std::vector<Mask> padj_;
  MinorSearchStats* stats_;
  std::vector<int> order_;
  std::vector<int> twin_prev_;
  std::vector<std::pair<int, int>> pattern_edges_;
  std::vector<std::vector<int>> components_;
  std::vector<Mask> component_masks_;
  Mask unassigned_ = 0;
  std::vector<Mask> z_;
  std::vector<Mask> reach_;
  int started_ = 0;
};

// Contraction oracle --------------------------------------------------------

struct Small {
  int n = 0;
  std::vector<Mask> adj;

  int edges() const {
    int m = 0;
    for (Mask r : adj) m += std::popcount(r);
    return m / 2;
  }
};

Small small_from(const Graph& g) { return {static_cast<int>(g.order()), adjacency_masks(g)}; }

Small delete_vertex(const Small& g, int v) {
  Small out;
  out.n = g.n - 1;
  for (int u = 0; u < g.n; ++u) {
    if (u == v) continue;
    const Mask r = g.adj[static_cast<std::size_t>(u)];
    const Mask low = r & (bit(v) - 1);
    const Mask high = (r >> 1) & ~(bit(v) - 1);
    out.adj.push_back(low | high);
  }
  return out;
}

Small contract_edge(const Small& g, int u, int v) {
  // merge v into u, then drop v
  Small merged = g;
  const Mask nv = g.adj[static_cast<std::size_t>(v)] & ~bit(u);
  merged.adj[static_cast<std::size_t>(u)] |= nv;
  Mask rest = nv;
  while (rest) {
    const int w = std::countr_zero(rest);
    rest &= rest - 1;
    merged.adj[static_cast<std::size_t>(w)] |= bit(u);
  }
  return delete_vertex(merged, v);
}

std::string canonical_key(const Small& g) {
  const int n = g.n;
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  std::size_t classes = 1;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(color[static_cast<std::size_t>(v)]);
      Mask r = g.adj[static_cast<std::size_t>(v)];
      std::vector<int> nc;
      while (r) {
        nc.push_back(color[static_cast<std::size_t>(std::countr_zero(r))]);
        r &= r - 1;
      }
      std::sort(nc.begin(), nc.end());
      s.insert(s.end(), nc.begin(), nc.end());
    }
    auto distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      color[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) - distinct.begin());
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return color[static_cast<std::size_t>(a)] < color[static_cast<std::size_t>(b)]; });

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  std::size_t perms = 1;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && color[static_cast<std::size_t>(order[j])] == color[static_cast<std::size_t>(order[i])]) ++j;
    cells.emplace_back(i, j);
    for (std::size_t f = 2; f <= j - i && perms <= 5040; ++f) perms *= f;
    i = j;
  }

  auto encode = [&](const std::vector<int>& ord) {
    std::string key(1, static_cast<char>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        key.push_back(g.adj[static_cast<std::size_t>(ord[static_cast<std::size_t>(i)])] & bit(ord[static_cast<std::size_t>(j)])
                          ? '1'
                          : '0');
    return key;
  };

  // too many tie permutations: an exact but non-canonical key still memoises soundly
  if (perms > 5040) return encode(order);

  std::string best;
  std::vector<int> current = order;
  // odometer over per-cell permutations
  while (true) {
    std::string key = encode(current);
    if (best.empty() || key < best) best = std::move(key);
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto first = current.begin() + static_cast<std::ptrdiff_t>(cells[c].first);
      auto last = current.begin() + static_cast<std::ptrdiff_t>(cells[c].second);
      if (std::next_permutation(first, last)) break;  // wraps to sorted on false
    }
    if (c == cells.size()) break;
  }
  return best;
}

bool has_subgraph(const Small& host, const Small& pattern) {
  std::vector<int> order(static_cast<std::size_t>(pattern.n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(pattern.adj[static_cast<std::size_t>(a)]) > std::popcount(pattern.adj[static_cast<std::size_t>(b)]);
  });
  std::vector<int> image(static_cast<std::size_t>(pattern.n), -1);
  Mask used = 0;
  auto extend = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    const int a = order[i];
    const int need = std::popcount(pattern.adj[static_cast<std::size_t>(a)]);
    for (int x = 0; x < host.n; ++x) {
      if (used & bit(x)) continue;
      if (std::popcount(host.adj[static_cast<std::size_t>(x)]) < need) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const int b = order[j];
        if ((pattern.adj[static_cast<std::size_t>(a)] & bit(b)) &&
            !(host.adj[static_cast<std::size_t>(x)] & bit(image[static_cast<std::size_t>(b)])))
          ok = false;
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(a)] = x;
      used |= bit(x);
      if (self(self, i + 1)) return true;
      used &= ~bit(x);
    }
    return false;
  };
  return extend(extend, 0);
}

class ContractionOracle {
 public:
  explicit ContractionOracle(const Graph& pattern) : pattern_(small_from(pattern)), pattern_edges_(pattern_.edges()) {}

  bool contains(const Small& g) {
    if (g.n < pattern_.n || g.edges() < pattern_edges_) return false;
    const std::string key = canonical_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool found = has_subgraph(g, pattern_);
    if (!found && g.n > pattern_.n) {
      for (int v = 0; v < g.n && !found; ++v) found = contains(delete_vertex(g, v));
      for (int u = 0; u < g.n && !found; ++u) {
        Mask later = g.adj[static_cast<std::size_t>(u)] & ~((bit(u) << 1) - 1);
        while (later && !found) {
          const int v = std::countr_zero(later);
          later &= later - 1;
          found = contains(contract_edge(g, u, v));
        }
      }
    }
    memo_.emplace(key, found);
    return found;
  }

 private:
  Small pattern_;
  int pattern_edges_;
  std::unordered_map<std::string, bool> memo_;
};

void check_word_size(const Graph& g, const char* what) {
  if (g.order() > kWordVertices)
    throw GuardError(std::string(what) + " needs at most 64 vertices, got " + std::to_string(g.order()));
}

}  // namespace

ModelCheck verify_model(const Graph& host, const Graph& pattern, const MinorModel& model) {
  return verify_impl(host, pattern, model, true);
}

ModelCheck verify_partial_model(const Graph& host, const Graph& pattern, const MinorModel& model) {
  return verify_impl(host, pattern, model, false);
}

std::optional<MinorModel> contains_minor(const Graph& host, const Graph& pattern, MinorSearchStats* stats) {
  check_word_size(host, "minor search");
  if (pattern.order() > host.order() || pattern.size() > host.size()) return std::nullopt;
  MinorModel model;
  if (pattern.order() == 0) return model;
  LabelSearch search(host, pattern, stats);
  const auto sets = search.run();
  if (!sets) return std::nullopt;
  for (std::size_t h = 0; h < sets->size(); ++h)
    model.branch_sets.emplace(static_cast<int>(h), VertexSet::from_mask(host.order(), (*sets)[h]));
  if (!verify_model(host, pattern, model)) throw std::logic_error("minor search produced an invalid model");
  return model;
}

bool contains_minor_contraction_oracle(const Graph& host, const Graph& pattern) {
  enforce_guard("contraction oracle host order", host.order(), 9);
  check_word_size(host, "contraction oracle");
  if (pattern.order() == 0) return true;
  ContractionOracle oracle(pattern);
  return oracle.contains(small_from(host));
}

std::size_t hadwiger_number(const Graph& g) {
  enforce_guard("hadwiger number order", g.order(), 12);
  std::size_t t = 0;
  while (t < g.order() && contains_minor(g, named::complete(t + 1))) ++t;
  return t;
}

CliqueSum clique_sum(const CliqueSumSpec& spec) {
  const std::size_t n1 = spec.g1.order();
  const std::size_t n2 = spec.g2.order();
  VertexSet c1(n1);
  VertexSet c2(n2);
  std::vector<int> g2_to_union(n2, -1);
  for (auto [a, b] : spec.ident) {
    if (a < 0 || static_cast<std::size_t>(a) >= n1 || b < 0 || static_cast<std::size_t>(b) >= n2)
      throw std::out_of_range("identified vertex out of range");
    if (c1.test(a) || c2.test(b)) throw PreconditionError("identification is not injective");
    c1.set(a);
    c2.set(b);
    g2_to_union[static_cast<std::size_t>(b)] = a;
  }
  if (!is_clique(spec.g1, c1)) throw PreconditionError("identified set " + c1.to_string() + " is not a clique of G1");
  if (!is_clique(spec.g2, c2)) throw PreconditionError("identified set " + c2.to_string() + " is not a clique of G2");

  int next = static_cast<int>(n1);
  for (std::size_t v = 0; v < n2; ++v)
    if (g2_to_union[v] < 0) g2_to_union[v] = next++;
  CliqueSum out{spec.g1, g2_to_union, c1};
  out.graph = add_isolated(spec.g1, n2 - spec.ident.size());
  for (auto [u, v] : spec.g2.edges()) {
    const int a = g2_to_union[static_cast<std::size_t>(u)];
    const int b = g2_to_union[static_cast<std::size_t>(v)];
    if (!out.graph.has_edge(a, b)) out.graph.add_edge(a, b);
  }
  out.clique = VertexSet(out.graph.order());
  c1.for_each([&](int v) { out.clique.set(v); });
  return out;
}

MinorModel restrict_model_through_clique(const Graph& host_union, const VertexSet& clique, const VertexSet& side,
                                         const Graph& pattern, const MinorModel& model) {
  if (clique.universe() != host_union.order() || side.universe() != host_union.order())
    throw std::invalid_argument("vertex sets must share the host universe");
  if (!is_clique(host_union, clique)) throw PreconditionError("separator " + clique.to_string() + " is not a clique");
  if (const auto check = verify_partial_model(host_union, pattern, model); !check)
    throw PreconditionError("input model is invalid: " + check.detail);

  const VertexSet kept = side | clique;
  const VertexSet near = side - clique;
  const VertexSet far = ~kept;
  bool separated = true;
  near.for_each([&](int v) { separated = separated && !host_union.neighbors(v).intersects(far); });
  if (!separated) throw PreconditionError("the clique does not separate the chosen side from the rest");

  MinorModel out;
  for (const auto& [h, z] : model.branch_sets) {
    if (z.intersects(far) && z.intersects(near) && !z.intersects(clique))
      throw PreconditionError("branch set of " + std::to_string(h) + " " + z.to_string() +
                              " crosses the separator without meeting it");
    const VertexSet kept_part = z & kept;
    if (kept_part.any()) out.branch_sets.emplace(h, kept_part);
  }
  if (const auto check = verify_partial_model(host_union, pattern, out); !check)
    throw std::logic_error("restricted model is invalid: " + check.detail);
  return out;
}

std::optional<VertexSet> find_minimum_minor_support(const Graph& g, const Graph& f) {
  enforce_guard("minimum support search order", g.order(), 10);
  const int n = static_cast<int>(g.order());
  for (int size = static_cast<int>(f.order()); size <= n; ++size) {
    // combinations in lexicographic order of member lists
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      const VertexSet x(g.order(), std::span<const int>(pick));
      if (contains_minor(induced_subgraph(g, x), f)) return x;
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

std::vector<NeighborBoundViolation> support_neighbor_bound_violations(const Graph& g, const Graph& f,
                                                                      const VertexSet& support,
                                                                      const MinorModel& model) {
  const std::size_t bound = 9 * f.order();
  std::vector<NeighborBoundViolation> out;
  (~support).for_each([&](int v) {
    for (const auto& [h, z] : model.branch_sets) {
      const std::size_t k = (g.neighbors(v) & z).count();
      if (k >= bound) out.push_back({v, h, k});
    }
  });
  return out;
}

MinorModel lift_model(const MinorModel& model, const std::vector<int>& original, std::size_t host_order) {
  MinorModel out;
  for (const auto& [h, z] : model.branch_sets) {
    VertexSet lifted(host_order);
    z.for_each([&](int v) { lifted.set(original.at(static_cast<std::size_t>(v))); });
    out.branch_sets.emplace(h, lifted);
  }
  return out;
}

}  // namespace forge
