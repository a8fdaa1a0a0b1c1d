#include "forge/random.hpp"

#include <stdexcept>
#include <unordered_set>

namespace forge {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below needs a positive bound");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool bernoulli(Rng& rng, const Rational& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("probability " + to_string(p) + " outside [0, 1]");
  if (p == 0) return false;
  if (p == 1) return true;
  const BigInt& den = denominator(p);
  if (den > BigInt(UINT64_MAX)) throw std::invalid_argument("probability denominator exceeds 64 bits");
  return uniform_below(rng, den.convert_to<std::uint64_t>()) < numerator(p).convert_to<std::uint64_t>();
}

BipartiteGraph sample_bipartite(std::size_t m, std::size_t n, const Rational& p, std::uint64_t seed) {
  Rng rng(seed);
  BipartiteGraph g(m, n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (bernoulli(rng, p)) g.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

std::uint64_t pair_index(std::size_t n, int u, int v) {
  if (u > v) std::swap(u, v);
  const auto uu = static_cast<std::uint64_t>(u);
  // pairs before row u: sum_{i<u} (n-1-i)
  return uu * (2 * n - uu - 1) / 2 + static_cast<std::uint64_t>(v - u - 1);
}

std::pair<int, int> pair_from_index(std::size_t n, std::uint64_t index) {
  std::uint64_t u = 0;
  std::uint64_t row = n - 1;
  while (index >= row) {
    index -= row;
    ++u;
    --row;
  }
  return {static_cast<int>(u), static_cast<int>(u + 1 + index)};
}

namespace {

std::uint64_t pair_count(std::size_t n) { return static_cast<std::uint64_t>(n) * (n - (n > 0 ? 1 : 0)) / 2; }

void check_edge_count(std::size_t n, std::size_t m) {
  if (m > pair_count(n))
    throw std::out_of_range("m = " + std::to_string(m) + " exceeds n(n-1)/2 = " + std::to_string(pair_count(n)));
}

}  // namespace

Graph sample_gnm_uniform(std::size_t n, std::size_t m, std::uint64_t seed) {
  check_edge_count(n, m);
  Rng rng(seed);
  const std::uint64_t total = pair_count(n);
  Graph g(n);
  std::unordered_set<std::uint64_t> chosen;
  for (std::uint64_t j = total - m; j < total; ++j) {
    const std::uint64_t t = uniform_below(rng, j + 1);
    const std::uint64_t pick = chosen.count(t) ? j : t;
    chosen.insert(pick);
    const auto [u, v] = pair_from_index(n, pick);
    g.add_edge(u, v);
  }
  return g;
}

Graph sample_gnm_sequential(std::size_t n, std::size_t m, std::uint64_t seed) {
  check_edge_count(n, m);
  Rng rng(seed);
  const std::uint64_t total = pair_count(n);
  Graph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t missing = total - i;
    if (2 * missing >= total) {
      // at least half the pairs are free: rejection is uniform on them
      while (true) {
        const auto [u, v] = pair_from_index(n, uniform_below(rng, total));
        if (!g.has_edge(u, v)) {
          g.add_edge(u, v);
          break;
        }
      }
    } else {
      std::uint64_t rank = uniform_below(rng, missing);
      bool placed = false;
      for (int u = 0; u < static_cast<int>(n) && !placed; ++u)
        for (int v = u + 1; v < static_cast<int>(n) && !placed; ++v) {
          if (g.has_edge(u, v)) continue;
          if (rank-- == 0) {
            g.add_edge(u, v);
            placed = true;
          }
        }
    }
  }
  return g;
}

}  // namespace forge
