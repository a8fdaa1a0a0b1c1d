#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "forge/graph.hpp"
#include "forge/lists.hpp"
#include "forge/rational.hpp"

namespace forge {

// Pasting ---------------------------------------------------------------

struct PastingSpec {
  Graph f;
  /// Attachment set shared by every copy.
  VertexSet attach;
  std::size_t copies = 1;
};

/// |S| + K (v(F) - |S|), exact.
BigInt pasting_order(const PastingSpec& spec);

/// K copies of F meeting exactly in S. Layout: S in ascending order, then one
/// block per copy holding the other vertices of F in ascending order.
/// Guarded to 4096 vertices.
Graph k_fold_pasting(const PastingSpec& spec);

/// Position of F's vertex v of the given copy inside k_fold_pasting(spec).
int pasting_vertex(const PastingSpec& spec, std::size_t copy, int v);

// Two-clique partitions -------------------------------------------------

struct TwoCliquePartition {
  VertexSet a;
  VertexSet b;
  /// Every vertex of B misses at most d vertices of A.
  std::size_t d = 0;
};

/// Throws PreconditionError if A, B do not partition V(F) into two cliques or
/// some B-vertex misses more than d vertices of A.
void validate_partition(const Graph& f, const TwoCliquePartition& part);

/// Largest number of A-vertices missed by a single B-vertex.
std::size_t realized_slack(const Graph& f, const VertexSet& a, const VertexSet& b);

/// |A| + |B| - 1; colours are 1..this.
std::size_t color_universe_size(const TwoCliquePartition& part);

/// Lists of one copy of F for a colouring of A given in ascending order of A.
/// A-vertices get the whole universe, a B-vertex loses the colours of the
/// A-vertices it is not adjacent to.
ListAssignment adversarial_lists_for_copy(const Graph& f, const TwoCliquePartition& part,
                                          const std::vector<int>& a_colors);

struct PastingCounterexample {
  /// Colours of A in ascending order of A.
  std::vector<int> a_colors;
  /// A full colouring of F extending them.
  Coloring extension;
};

/// Searches the injective colourings of A with colours 1..|A|+|B|-1 for one
/// whose adversarial B-lists still admit a proper extension. B need not be a
/// clique here. Colourings are scanned in lexicographic order.
std::optional<PastingCounterexample> find_pasting_counterexample(const Graph& f, const VertexSet& a,
                                                                 const VertexSet& b,
                                                                 std::uint64_t* checked = nullptr);

struct PastingBoundReport {
  /// No A-colouring extends, so χ_ℓ of the K-fold pasting at A is at least bound.
  bool certified = false;
  std::size_t bound = 0;
  /// K = (|A| + |B| - 1)^|A|.
  BigInt copies;
  std::uint64_t colorings_checked = 0;
  std::optional<PastingCounterexample> counterexample;
};

/// Factored check of the pasting lower bound: one colouring problem per proper
/// colouring of A instead of one huge graph. Validates the partition first.
PastingBoundReport verify_pasting_lower_bound(const Graph& f, const TwoCliquePartition& part);

// Gadgets ---------------------------------------------------------------

struct GadgetAttempt {
  std::size_t attempt = 0;
  std::uint64_t seed = 0;
  std::size_t max_degree = 0;
  bool degree_ok = false;
  /// Unset when the degree test already failed.
  std::optional<bool> minor_free;
};

struct Gadget {
  /// A occupies 0..|A|-1, B follows.
  Graph f;
  TwoCliquePartition part;
  /// The accepted bipartite sample.
  BipartiteGraph sample;
  std::uint64_t seed = 0;
};

struct GadgetOutcome {
  /// Empty when every attempt was rejected.
  std::optional<Gadget> gadget;
  std::vector<GadgetAttempt> attempts;
  std::size_t a_size = 0;
  std::size_t b_size = 0;
  /// Slack allowed by the construction (⌊εn⌋ or ⌊δn⌋).
  std::size_t nominal_d = 0;
  Rational p;
  /// Connectivity gadget only.
  std::size_t connectivity = 0;
  bool low_connectivity = false;
  /// Random gadget only: induced patterns H[U] tested per accepted sample.
  std::size_t subsets_checked = 0;
};

/// Samples G(n, n; ε/2) until one has maximum degree <= εn and the complement
/// of G[A ∪ B] is H-minor-free, with |A| = ⌊(1-2ε)κ(H)⌋ and |B| = ⌊(1-2ε)n⌋
/// taken as the lowest indices. part.d is ⌊εn⌋. Requires 0 < ε < 1/2;
/// κ(H) < εn only sets low_connectivity.
GadgetOutcome build_thm_conn_gadget(const Graph& h, const Rational& eps, std::uint64_t seed, std::size_t attempts);

/// ⌊(1-3δ)n⌋ for 0 < δ < 1/3.
std::size_t random_gadget_part_size(const Rational& delta, std::size_t n);

/// Samples G(s, s; p), s = ⌊(1-3δ)n⌋, until its maximum degree is <= ⌊δn⌋ and
/// its complement contains no H[U] minor for any U of size ⌈(1-δ)n⌉; larger U
/// need no check since H[U] then has a smaller H[U'] as a subgraph.
/// p defaults to δ/2. Requires δ > 0 and 7δ < 1.
GadgetOutcome build_thm_random_gadget(const Graph& h, const Rational& delta, std::optional<Rational> p,
                                      std::uint64_t seed, std::size_t attempts);

/// Vertex subsets of the given size in lexicographic order.
std::vector<VertexSet> subsets_of_size(std::size_t n, std::size_t k);

}  // namespace forge
