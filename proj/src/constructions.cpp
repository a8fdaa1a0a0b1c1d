#include "forge/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "forge/coloring.hpp"
#include "forge/errors.hpp"
#include "forge/guards.hpp"
#include "forge/minors.hpp"
#include "forge/random.hpp"

namespace forge {

namespace {

void check_same_universe(const Graph& f, const VertexSet& s, const char* name) {
  if (s.universe() != f.order())
    throw PreconditionError(std::string(name) + " has universe " + std::to_string(s.universe()) + ", graph has " +
                            std::to_string(f.order()) + " vertices");
}

void check_cover(const Graph& f, const VertexSet& a, const VertexSet& b) {
  check_same_universe(f, a, "A");
  check_same_universe(f, b, "B");
  if (a.intersects(b)) throw PreconditionError("A and B overlap");
  if ((a | b) != f.all()) throw PreconditionError("A and B do not cover V(F)");
  if (f.order() == 0) throw PreconditionError("F has no vertices");
}

// falling factorial n (n-1) ... (n-r+1), saturating
std::size_t injective_count(std::size_t n, std::size_t r) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (n < i) return 0;
    if (out > SIZE_MAX / (n - i + 1)) return SIZE_MAX;
    out *= n - i;
  }
  return out;
}

std::vector<int> lists_for(const Graph& f, const std::vector<int>& a_members, const std::vector<int>& a_colors,
                           int b_vertex, int universe) {
  std::vector<int> list;
  for (int c = 1; c <= universe; ++c) list.push_back(c);
  for (std::size_t i = 0; i < a_members.size(); ++i)
    if (!f.has_edge(a_members[i], b_vertex)) std::erase(list, a_colors[i]);
  return list;
}

}  // namespace

BigInt pasting_order(const PastingSpec& spec) {
  const std::size_t s = spec.attach.count();
  return BigInt(s) + BigInt(spec.copies) * BigInt(spec.f.order() - s);
}

Graph k_fold_pasting(const PastingSpec& spec) {
  check_same_universe(spec.f, spec.attach, "attachment set");
  if (spec.copies == 0) throw PreconditionError("K must be positive");
  const BigInt order = pasting_order(spec);
  const std::size_t limit = guard_limit(4096);
  if (order > BigInt(limit))
    throw GuardError("pasting size " + order.str() + " exceeds the size guard of " + std::to_string(limit) +
                     " (set FORGE_GUARD_OVERRIDE to raise it)");
  Graph out(order.convert_to<std::size_t>());
  for (std::size_t copy = 0; copy < spec.copies; ++copy)
    for (auto [u, v] : spec.f.edges()) {
      if (copy > 0 && spec.attach.test(u) && spec.attach.test(v)) continue;
      out.add_edge(pasting_vertex(spec, copy, u), pasting_vertex(spec, copy, v));
    }
  return out;
}

int pasting_vertex(const PastingSpec& spec, std::size_t copy, int v) {
  if (v < 0 || static_cast<std::size_t>(v) >= spec.f.order()) throw std::out_of_range("vertex outside F");
  if (copy >= spec.copies) throw std::out_of_range("copy index outside [0, K)");
  int below = 0;
  for (int u = 0; u < v; ++u) below += spec.attach.test(u) ? 1 : 0;
  if (spec.attach.test(v)) return below;
  const std::size_t s = spec.attach.count();
  const std::size_t block = spec.f.order() - s;
  return static_cast<int>(s + copy * block) + (v - below);
}

void validate_partition(const Graph& f, const TwoCliquePartition& part) {
  check_cover(f, part.a, part.b);
  if (!is_clique(f, part.a)) throw PreconditionError("A is not a clique");
  if (!is_clique(f, part.b)) throw PreconditionError("B is not a clique");
  const std::size_t slack = realized_slack(f, part.a, part.b);
  if (slack > part.d)
    throw PreconditionError("a vertex of B misses " + std::to_string(slack) + " vertices of A, more than d = " +
                            std::to_string(part.d));
}

std::size_t realized_slack(const Graph& f, const VertexSet& a, const VertexSet& b) {
  std::size_t worst = 0;
  b.for_each([&](int v) { worst = std::max(worst, (a - f.neighbors(v)).count()); });
  return worst;
}

std::size_t color_universe_size(const TwoCliquePartition& part) { return part.a.count() + part.b.count() - 1; }

ListAssignment adversarial_lists_for_copy(const Graph& f, const TwoCliquePartition& part,
                                          const std::vector<int>& a_colors) {
  check_cover(f, part.a, part.b);
  const auto a_members = part.a.members();
  if (a_colors.size() != a_members.size()) throw PreconditionError("need one colour per vertex of A");
  const int universe = static_cast<int>(color_universe_size(part));
  for (const int c : a_colors)
    if (c < 1 || c > universe)
      throw PreconditionError("colour " + std::to_string(c) + " outside [1, " + std::to_string(universe) + "]");
  std::vector<int> full(static_cast<std::size_t>(universe));
  std::iota(full.begin(), full.end(), 1);
  std::vector<std::vector<int>> raw(f.order(), full);
  part.b.for_each([&](int v) { raw[static_cast<std::size_t>(v)] = lists_for(f, a_members, a_colors, v, universe); });
  return ListAssignment(std::move(raw));
}

std::optional<PastingCounterexample> find_pasting_counterexample(const Graph& f, const VertexSet& a,
                                                                 const VertexSet& b, std::uint64_t* checked) {
  check_cover(f, a, b);
  const auto a_members = a.members();
  const std::size_t r = a_members.size();
  const int universe = static_cast<int>(a.count() + b.count() - 1);
  enforce_guard("proper colourings of A", injective_count(static_cast<std::size_t>(universe), r), 2'000'000);

  std::vector<int> colors(r, 0);
  std::vector<bool> used(static_cast<std::size_t>(universe) + 1, false);
  std::optional<PastingCounterexample> found;
  std::uint64_t count = 0;

  auto test_leaf = [&]() {
    ++count;
    std::vector<std::vector<int>> raw(f.order());
    for (std::size_t i = 0; i < r; ++i) raw[static_cast<std::size_t>(a_members[i])] = {colors[i]};
    b.for_each([&](int v) { raw[static_cast<std::size_t>(v)] = lists_for(f, a_members, colors, v, universe); });
    if (auto c = is_l_colorable(f, ListAssignment(std::move(raw)))) found = PastingCounterexample{colors, *c};
  };

  auto descend = [&](auto&& self, std::size_t i) -> void {
    if (found) return;
    if (i == r) {
      test_leaf();
      return;
    }
    for (int c = 1; c <= universe && !found; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      used[static_cast<std::size_t>(c)] = true;
      colors[i] = c;
      self(self, i + 1);
      used[static_cast<std::size_t>(c)] = false;
    }
  };
  descend(descend, 0);
  if (checked) *checked = count;
  return found;
}

PastingBoundReport verify_pasting_lower_bound(const Graph& f, const TwoCliquePartition& part) {
  validate_partition(f, part);
  PastingBoundReport report;
  const std::size_t total = part.a.count() + part.b.count();
  report.bound = total > part.d ? total - part.d : 0;
  report.copies = boost::multiprecision::pow(BigInt(color_universe_size(part)), static_cast<unsigned>(part.a.count()));
  report.counterexample = find_pasting_counterexample(f, part.a, part.b, &report.colorings_checked);
  report.certified = !report.counterexample;
  return report;
}

std::vector<VertexSet> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<VertexSet> out;
  if (k > n) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.emplace_back(n, std::span<const int>(idx));
    std::size_t pos = k;
    while (pos > 0 && static_cast<std::size_t>(idx[pos - 1]) == n - k + pos - 1) --pos;
    if (pos == 0) return out;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

namespace {

VertexSet prefix(std::size_t universe, std::size_t k) {
  VertexSet s(universe);
  for (std::size_t i = 0; i < k; ++i) s.set(static_cast<int>(i));
  return s;
}

Gadget assemble(const BipartiteGraph& g, std::size_t a_size, std::size_t b_size, std::size_t d, std::uint64_t seed) {
  Gadget out;
  out.f = bipartite_union_complement(g, prefix(g.a_size(), a_size), prefix(g.b_size(), b_size));
  const std::size_t total = a_size + b_size;
  out.part.a = prefix(total, a_size);
  out.part.b = VertexSet::full(total) - out.part.a;
  out.part.d = d;
  out.sample = g;
  out.seed = seed;
  return out;
}

}  // namespace

GadgetOutcome build_thm_conn_gadget(const Graph& h, const Rational& eps, std::uint64_t seed, std::size_t attempts) {
  if (eps <= 0 || eps * 2 >= 1) throw std::invalid_argument("epsilon must lie in (0, 1/2), got " + to_string(eps));
  const std::size_t n = h.order();
  GadgetOutcome out;
  out.connectivity = vertex_connectivity(h);
  out.low_connectivity = Rational(out.connectivity) < eps * n;
  out.p = eps / 2;
  out.a_size = static_cast<std::size_t>(floor_to_int((1 - 2 * eps) * out.connectivity));
  out.b_size = static_cast<std::size_t>(floor_to_int((1 - 2 * eps) * n));
  out.nominal_d = static_cast<std::size_t>(floor_to_int(eps * n));
  enforce_guard("gadget order", out.a_size + out.b_size, kWordVertices);
  for (std::size_t t = 0; t < attempts; ++t) {
    GadgetAttempt rec;
    rec.attempt = t;
    rec.seed = derive_seed(seed, t);
    const BipartiteGraph g = sample_bipartite(n, n, out.p, rec.seed);
    rec.max_degree = g.max_degree();
    rec.degree_ok = Rational(rec.max_degree) <= eps * n;
    if (rec.degree_ok) {
      Gadget candidate = assemble(g, out.a_size, out.b_size, out.nominal_d, rec.seed);
      rec.minor_free = !contains_minor(candidate.f, h).has_value();
      if (*rec.minor_free) out.gadget = std::move(candidate);
    }
    out.attempts.push_back(rec);
    if (out.gadget) break;
  }
  return out;
}

std::size_t random_gadget_part_size(const Rational& delta, std::size_t n) {
  if (delta <= 0 || delta * 3 >= 1) throw std::invalid_argument("delta must lie in (0, 1/3), got " + to_string(delta));
  return static_cast<std::size_t>(floor_to_int((1 - 3 * delta) * n));
}

GadgetOutcome build_thm_random_gadget(const Graph& h, const Rational& delta, std::optional<Rational> p,
                                      std::uint64_t seed, std::size_t attempts) {
  if (delta <= 0 || delta * 7 >= 1) throw std::invalid_argument("delta must satisfy 0 < 7 delta < 1, got " + to_string(delta));
  const Rational prob = p.value_or(delta / 2);
  if (prob < 0 || prob > 1) throw std::invalid_argument("p must lie in [0, 1], got " + to_string(prob));
  const std::size_t n = h.order();
  GadgetOutcome out;
  out.p = prob;
  out.a_size = out.b_size = random_gadget_part_size(delta, n);
  out.nominal_d = static_cast<std::size_t>(floor_to_int(delta * n));
  enforce_guard("gadget order", 2 * out.a_size, kWordVertices);
  const auto u_size = static_cast<std::size_t>(ceil_to_int((1 - delta) * n));
  const auto subsets = subsets_of_size(n, u_size);
  for (std::size_t t = 0; t < attempts; ++t) {
    GadgetAttempt rec;
    rec.attempt = t;
    rec.seed = derive_seed(seed, t);
    const BipartiteGraph g = sample_bipartite(out.a_size, out.b_size, prob, rec.seed);
    rec.max_degree = g.max_degree();
    rec.degree_ok = rec.max_degree <= out.nominal_d;
    if (rec.degree_ok) {
      Gadget candidate = assemble(g, out.a_size, out.b_size, out.nominal_d, rec.seed);
      rec.minor_free = std::none_of(subsets.begin(), subsets.end(), [&](const VertexSet& u) {
        return contains_minor(candidate.f, induced_subgraph(h, u)).has_value();
      });
      if (*rec.minor_free) {
        out.gadget = std::move(candidate);
        out.subsets_checked = subsets.size();
      }
    }
    out.attempts.push_back(rec);
    if (out.gadget) break;
  }
  return out;
}

}  // namespace forge
