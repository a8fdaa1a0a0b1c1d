#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "forge/lists.hpp"
#include "forge/vertex_set.hpp"

namespace forge {

/// Hard cap on vertex count. Search kernels additionally require a single
/// 64-bit word per row and check that on entry.
inline constexpr std::size_t kMaxVertices = 64 * 64;
inline constexpr std::size_t kWordVertices = 64;

/// Simple undirected graph with bit-row adjacency.
///
/// Rows are kept symmetric and irreflexive by every mutator; there is no way
/// to build a loop or a parallel edge.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, const std::vector<std::pair<int, int>>& edges);

  std::size_t order() const { return rows_.size(); }
  std::size_t size() const;  // edge count

  bool has_edge(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(v); }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  const VertexSet& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  std::size_t degree(int v) const { return rows_[static_cast<std::size_t>(v)].count(); }

  /// Edges (u, v) with u < v in ascending lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  VertexSet all() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  /// Single-word adjacency row; requires order() <= 64.
  std::uint64_t row_mask(int v) const { return rows_[static_cast<std::size_t>(v)].mask(); }

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(int v) const;

  std::vector<VertexSet> rows_;
};

/// Bipartite graph with parts A = {0..a_size-1} and B = {0..b_size-1}.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t a_size, std::size_t b_size);

  std::size_t a_size() const { return a_size_; }
  std::size_t b_size() const { return b_size_; }

  bool has_edge(int a, int b) const { return rows_[static_cast<std::size_t>(a)].test(b); }
  void add_edge(int a, int b);

  /// B-side neighbours of a.
  const VertexSet& row(int a) const { return rows_[static_cast<std::size_t>(a)]; }
  std::size_t degree_a(int a) const { return rows_[static_cast<std::size_t>(a)].count(); }
  std::size_t degree_b(int b) const;
  std::size_t max_degree() const;
  std::size_t edge_count() const;

  /// Flattened graph on a_size + b_size vertices, A first.
  Graph as_graph() const;

  bool operator==(const BipartiteGraph& other) const = default;

 private:
  std::size_t a_size_ = 0;
  std::size_t b_size_ = 0;
  std::vector<VertexSet> rows_;
};

// Graph algebra.

Graph complement(const Graph& g);

/// Complement of the bipartite graph restricted to the chosen parts: both parts
/// become cliques and a cross pair is an edge iff it is not an edge of b.
/// Output vertices are a_sub members (ascending) followed by b_sub members.
Graph bipartite_union_complement(const BipartiteGraph& b, const VertexSet& a_sub,
                                 const VertexSet& b_sub);

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the host vertex relabelled to i.
  std::vector<int> original;
};

Graph induced_subgraph(const Graph& g, const VertexSet& s);
InducedSubgraph induced_subgraph_with_map(const Graph& g, const VertexSet& s);

/// Disjoint union, g's vertices first.
Graph disjoint_union(const Graph& g, const Graph& h);
/// g plus k isolated vertices appended.
Graph add_isolated(const Graph& g, std::size_t k);

// Invariants.

std::size_t min_degree(const Graph& g);
std::size_t max_degree(const Graph& g);
/// e_G(A, B); throws std::invalid_argument when A and B overlap.
std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);
/// Vertices reachable from `from` inside `within` (from must be in within).
VertexSet reach_within(const Graph& g, int from, const VertexSet& within);
bool induces_connected(const Graph& g, const VertexSet& s);
std::vector<VertexSet> connected_components(const Graph& g);

struct Degeneracy {
  std::size_t value = 0;
  /// Elimination order; each vertex has at most `value` neighbours later in it.
  std::vector<int> order;
};

/// Min-degree peeling, ties to the lowest index.
Degeneracy degeneracy(const Graph& g);

/// Vertex connectivity via unit-capacity flow on the split digraph over
/// non-adjacent pairs. K_n gives n-1, a single vertex gives 0, n = 0 throws.
std::size_t vertex_connectivity(const Graph& g);

/// Maximum number of internally vertex-disjoint s-t paths for non-adjacent s, t.
std::size_t local_connectivity(const Graph& g, int s, int t);

/// Lexicographically least k-clique, if any.
std::optional<VertexSet> find_clique(const Graph& g, std::size_t k);

std::size_t clique_number(const Graph& g);

/// e(G) > (1 - 1/(k-1)) v(G)^2 / 2, decided in integers. Requires k >= 2.
bool turan_threshold_exceeded(const Graph& g, std::size_t k);

/// Greedy L-colouring along the reversed degeneracy order.
///
/// Throws PreconditionError when some list is shorter than degeneracy + 1.
/// Under the precondition the greedy pass cannot get stuck, so an empty
/// optional would indicate a bug rather than an uncolourable instance.
std::optional<Coloring> color_by_degeneracy(const Graph& g, const ListAssignment& lists);

}  // namespace forge
