#pragma once

#include <cstdint>
#include <random>

#include "forge/graph.hpp"
#include "forge/rational.hpp"

namespace forge {

using Rng = std::mt19937_64;

/// Independent stream seed for (seed, stream); SplitMix64 finaliser.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Unbiased integer in [0, bound) by rejection on the top of the range.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform double in [0, 1) from the top 53 bits.
double uniform_unit(Rng& rng);

/// Exact Bernoulli(p) for rational p in [0, 1]; the denominator must fit in 64 bits.
bool bernoulli(Rng& rng, const Rational& p);

/// G(m, n; p): every cross pair independently with probability p, drawn in
/// row-major order (a, b).
BipartiteGraph sample_bipartite(std::size_t m, std::size_t n, const Rational& p, std::uint64_t seed);

/// Uniform n-vertex m-edge graph: Floyd's sampling of m distinct pair indices.
Graph sample_gnm_uniform(std::size_t n, std::size_t m, std::uint64_t seed);

/// Uniform n-vertex m-edge graph built by adding, m times, a uniformly chosen
/// pair that is not yet an edge.
Graph sample_gnm_sequential(std::size_t n, std::size_t m, std::uint64_t seed);

/// Index of pair (u, v), u < v, in the row-major order of pairs.
std::uint64_t pair_index(std::size_t n, int u, int v);
std::pair<int, int> pair_from_index(std::size_t n, std::uint64_t index);

}  // namespace forge
