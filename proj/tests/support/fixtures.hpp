#pragma once

// Seeded instance generators shared by the unit tests and the acceptance run.

#include <random>
#include <utility>
#include <vector>

#include "forge/constructions.hpp"
#include "forge/graph.hpp"
#include "forge/minors.hpp"

namespace fixtures {

using forge::Graph;

/// Rejection-samples a graph on n vertices without a `pattern` minor that
/// contains a clique of the requested size.
Graph random_minor_free(std::mt19937_64& rng, const Graph& pattern, std::size_t n, std::size_t clique_size);

/// A uniformly chosen k-clique of g (g must have one).
std::vector<int> random_clique(std::mt19937_64& rng, const Graph& g, std::size_t k);

struct GlueTrial {
  Graph g1;
  Graph g2;
  std::vector<std::pair<int, int>> ident;
  forge::CliqueSum sum;
  bool union_minor_free = false;
};

/// Two random pattern-minor-free graphs with v <= max_n glued on a clique of
/// size below `clique_bound`.
GlueTrial glue_trial(std::mt19937_64& rng, const Graph& pattern, std::size_t clique_bound, std::size_t max_n);

/// F on a + b vertices: A = 0..a-1 and B = a..a+b-1 are cliques and bit
/// i*b + j of `cross` joins A-vertex i to B-vertex j.
struct TwoCliqueFixture {
  Graph f;
  forge::TwoCliquePartition part;
};
TwoCliqueFixture two_clique_fixture(std::size_t a, std::size_t b, std::uint64_t cross);

/// Every two-clique fixture whose materialised pasting has at most
/// `max_order` vertices, with d set to the realised slack.
std::vector<TwoCliqueFixture> small_pasting_fixtures(std::size_t max_order);

}  // namespace fixtures
