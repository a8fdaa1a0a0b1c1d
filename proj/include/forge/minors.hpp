#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forge/graph.hpp"

namespace forge {

/// H-minor model: pattern vertex -> branch set of host vertices.
///
/// A model produced by a restriction may cover only part of the pattern; it is
/// then a model of the pattern induced on domain().
struct MinorModel {
  std::map<int, VertexSet> branch_sets;

  std::vector<int> domain() const;
  bool operator==(const MinorModel& other) const = default;
};

struct ModelCheck {
  bool valid = true;
  /// "range", "coverage", "empty", "disjoint", "connectivity" or "edge".
  std::string failed_invariant;
  int pattern_vertex = -1;
  std::pair<int, int> pattern_edge{-1, -1};
  std::string detail;

  explicit operator bool() const { return valid; }
};

/// All three model invariants plus full coverage of the pattern.
ModelCheck verify_model(const Graph& host, const Graph& pattern, const MinorModel& model);
/// Same, against the pattern induced on the model's domain.
ModelCheck verify_partial_model(const Graph& host, const Graph& pattern, const MinorModel& model);

struct MinorSearchStats {
  std::uint64_t nodes = 0;
};

/// Exact H-minor search over branch-set labellings.
///
/// Any model can be grown until every unused host vertex has no used
/// neighbour, so each host component is either untouched or partitioned into
/// branch sets. The search labels used components vertex by vertex (BFS order
/// inside a component, components by lowest vertex), trying pattern vertices
/// by descending degree. Twin pattern vertices are started in a fixed order.
/// Pruning: unstarted labels must fit in the unassigned vertices, every label
/// must still be connectable through unassigned vertices, and every pattern
/// edge must still be realisable. The first model found is returned, so the
/// witness is deterministic. Requires v(host) <= 64.
std::optional<MinorModel> contains_minor(const Graph& host, const Graph& pattern,
                                         MinorSearchStats* stats = nullptr);

/// Independent oracle: recursion over edge contractions and vertex deletions,
/// memoised on canonical forms, with a subgraph test at every state.
/// Guarded to v(host) <= 9.
bool contains_minor_contraction_oracle(const Graph& host, const Graph& pattern);

/// Largest t with g containing K_t as a minor. Guarded to v(g) <= 12.
std::size_t hadwiger_number(const Graph& g);

struct CliqueSumSpec {
  Graph g1;
  Graph g2;
  /// (vertex of g1, vertex of g2) pairs identified with each other.
  std::vector<std::pair<int, int>> ident;
};

struct CliqueSum {
  /// g1 keeps its labels; the rest of g2 follows in ascending order.
  Graph graph;
  std::vector<int> g2_to_union;
  VertexSet clique;
};

/// Throws PreconditionError when the identified sets are not cliques or the
/// identification is not injective.
CliqueSum clique_sum(const CliqueSumSpec& spec);

/// Restricts a model of `pattern` in a clique-sum host to the side `side`.
///
/// The kept vertices are side plus the clique; each branch set is intersected
/// with them and pattern vertices whose branch set misses them are dropped.
/// The host must have no edge between side and the far side outside the
/// clique. Any path of a branch set that leaves through the clique returns to
/// it, so the shortcut over the clique edge keeps the restriction connected.
MinorModel restrict_model_through_clique(const Graph& host_union, const VertexSet& clique,
                                         const VertexSet& side, const Graph& pattern,
                                         const MinorModel& model);

/// Minimum-size X with g[X] containing f as a minor, scanning subsets by
/// increasing size in lexicographic order. Guarded to v(g) <= 10.
std::optional<VertexSet> find_minimum_minor_support(const Graph& g, const Graph& f);

struct NeighborBoundViolation {
  int outside_vertex;
  int pattern_vertex;
  std::size_t neighbors_in_branch_set;
};

/// Vertices v outside `support` with |N(v) ∩ Z_f| >= 9 v(F) for a branch set
/// of `model` (given in host labels).
std::vector<NeighborBoundViolation> support_neighbor_bound_violations(const Graph& g, const Graph& f,
                                                                      const VertexSet& support,
                                                                      const MinorModel& model);

/// Lifts a model found in an induced subgraph back to host labels.
MinorModel lift_model(const MinorModel& model, const std::vector<int>& original, std::size_t host_order);

}  // namespace forge
