#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forge/graph.hpp"
#include "forge/rational.hpp"

namespace forge {

enum class Verdict { holds, fails, inconclusive };
std::string to_string(Verdict v);

struct CheckMode {
  enum class Kind { exact, falsify };
  Kind kind = Kind::exact;
  /// Exact mode: search nodes before BudgetExhausted. Falsify mode: candidate
  /// witnesses to sample.
  std::uint64_t budget = 50'000'000;
  std::uint64_t seed = 0;

  static CheckMode exact(std::uint64_t budget = 50'000'000) { return {Kind::exact, budget, 0}; }
  static CheckMode falsify(std::uint64_t budget, std::uint64_t seed) { return {Kind::falsify, budget, seed}; }
};

struct PropertyPParams {
  Rational delta;
  std::uint64_t s = 1;
};

/// Vertices x_1..x_k, y_1..y_l of H with sets X_i in part A and Y_j in part B
/// such that no H-edge x_i y_j has X_i fully joined to Y_j.
struct PropertyPWitness {
  std::vector<int> xs;
  std::vector<int> ys;
  std::vector<VertexSet> x_sets;
  std::vector<VertexSet> y_sets;
};

struct PropertyPReport {
  Verdict verdict = Verdict::holds;
  std::optional<PropertyPWitness> witness;
  /// Exact: search nodes. Falsify: candidates sampled.
  std::uint64_t effort = 0;
};

/// Bipartite property P of g (parts A = rows, B = columns) relative to h.
///
/// Exact mode scans every k, l >= ⌈δn⌉ in increasing order and vertex sets in
/// lexicographic order. Index order inside a tuple is irrelevant, so tuples are
/// taken as sets. For a tuple the search assigns to each H-edge a non-edge
/// (a, b) of g with a in X_i and b in Y_j; shrinking a set never breaks a
/// violation, so sets made only of such representatives are enough. Sets of
/// vertices without an H-edge in the tuple stay empty.
PropertyPReport check_property_P(const BipartiteGraph& g, const Graph& h, const PropertyPParams& params,
                                 const CheckMode& mode = CheckMode::exact());

/// Exact check restricted to k = l = ⌈δn⌉.
PropertyPReport check_property_P_minimal(const BipartiteGraph& g, const Graph& h, const PropertyPParams& params,
                                         std::uint64_t budget = 50'000'000);

struct PropertyPComparison {
  PropertyPReport full;
  PropertyPReport minimal;
  /// The minimal-size restriction reached a different verdict.
  bool disagree = false;
};

PropertyPComparison compare_property_P_reductions(const BipartiteGraph& g, const Graph& h,
                                                  const PropertyPParams& params,
                                                  std::uint64_t budget = 50'000'000);

/// Straight-line re-check of a claimed violation.
bool is_property_P_violation(const BipartiteGraph& g, const Graph& h, const PropertyPParams& params,
                             const PropertyPWitness& w);

struct PropertyQParams {
  Rational delta;
  Rational d;
};

struct PropertyQWitness {
  VertexSet a;
  VertexSet b;
  std::uint64_t edges = 0;
};

struct PropertyQReport {
  Verdict verdict = Verdict::holds;
  std::optional<PropertyQWitness> witness;
  std::uint64_t threshold = 0;
  std::uint64_t effort = 0;
};

/// ⌈D n ln n⌉.
std::uint64_t property_Q_threshold(const PropertyQParams& params, std::size_t n);

/// Exact mode checks only |A| = |B| = ⌈δn⌉: e_H(A, B) only grows when A or B
/// grows, so these pairs are the binding ones. The lexicographically least
/// violating pair (A first) is reported. Falsify mode samples such pairs.
PropertyQReport check_property_Q(const Graph& h, const PropertyQParams& params,
                                 const CheckMode& mode = CheckMode::exact());

/// Every disjoint pair with |A|, |B| >= ⌈δn⌉; used to validate the reduction.
PropertyQReport check_property_Q_full(const Graph& h, const PropertyQParams& params);

bool is_property_Q_violation(const Graph& h, const PropertyQParams& params, const PropertyQWitness& w);

}  // namespace forge
