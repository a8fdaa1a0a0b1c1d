#include "fixtures.hpp"

#include <algorithm>
#include <stdexcept>

#include "oracles.hpp"

namespace fixtures {

std::vector<int> random_clique(std::mt19937_64& rng, const Graph& g, std::size_t k) {
  const int n = static_cast<int>(g.order());
  std::vector<std::vector<int>> cliques;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1u) members.push_back(v);
    if (forge::is_clique(g, forge::VertexSet(g.order(), std::span<const int>(members)))) cliques.push_back(members);
  }
  if (cliques.empty()) throw std::logic_error("no clique of the requested size");
  auto pick = cliques[rng() % cliques.size()];
  std::shuffle(pick.begin(), pick.end(), rng);
  return pick;
}

Graph random_minor_free(std::mt19937_64& rng, const Graph& pattern, std::size_t n, std::size_t clique_size) {
  while (true) {
    const double p = 0.15 + static_cast<double>(rng() % 45) / 100.0;
    Graph g = oracle::random_graph(n, p, rng);
    if (clique_size > 0 && !oracle::has_clique(g, clique_size)) continue;
    if (!forge::contains_minor(g, pattern)) return g;
  }
}

GlueTrial glue_trial(std::mt19937_64& rng, const Graph& pattern, std::size_t clique_bound, std::size_t max_n) {
  const std::size_t s = rng() % clique_bound;
  const std::size_t low = std::max<std::size_t>(s, 1);
  GlueTrial t;
  t.g1 = random_minor_free(rng, pattern, low + rng() % (max_n - low + 1), s);
  t.g2 = random_minor_free(rng, pattern, low + rng() % (max_n - low + 1), s);
  const auto c1 = random_clique(rng, t.g1, s);
  const auto c2 = random_clique(rng, t.g2, s);
  for (std::size_t i = 0; i < s; ++i) t.ident.emplace_back(c1[i], c2[i]);
  t.sum = forge::clique_sum({t.g1, t.g2, t.ident});
  t.union_minor_free = !forge::contains_minor(t.sum.graph, pattern).has_value();
  return t;
}

TwoCliqueFixture two_clique_fixture(std::size_t a, std::size_t b, std::uint64_t cross) {
  TwoCliqueFixture out{Graph(a + b), {forge::VertexSet(a + b), forge::VertexSet(a + b), 0}};
  for (std::size_t i = 0; i < a; ++i) out.part.a.set(static_cast<int>(i));
  for (std::size_t j = 0; j < b; ++j) out.part.b.set(static_cast<int>(a + j));
  for (std::size_t u = 0; u < a + b; ++u)
    for (std::size_t v = u + 1; v < a + b; ++v)
      if ((u < a) == (v < a)) out.f.add_edge(static_cast<int>(u), static_cast<int>(v));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      if ((cross >> (i * b + j)) & 1u) out.f.add_edge(static_cast<int>(i), static_cast<int>(a + j));
  out.part.d = forge::realized_slack(out.f, out.part.a, out.part.b);
  return out;
}

std::vector<TwoCliqueFixture> small_pasting_fixtures(std::size_t max_order) {
  std::vector<TwoCliqueFixture> out;
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 1; b <= 6; ++b) {
      std::size_t copies = 1;
      for (std::size_t i = 0; i < a; ++i) copies *= a + b - 1;
      if (a + copies * b > max_order) continue;
      for (std::uint64_t cross = 0; cross < (std::uint64_t{1} << (a * b)); ++cross)
        out.push_back(two_clique_fixture(a, b, cross));
    }
  return out;
}

}  // namespace fixtures
