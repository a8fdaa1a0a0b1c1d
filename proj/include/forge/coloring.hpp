#pragma once

#include <cstdint>
#include <optional>

#include "forge/graph.hpp"
#include "forge/lists.hpp"

namespace forge {

/// Exact L-colouring search.
///
/// Picks the uncoloured vertex with the fewest remaining colours (lowest index
/// on ties), tries its colours in ascending order and removes the chosen colour
/// from uncoloured neighbours, backtracking when a domain empties.
std::optional<Coloring> is_l_colorable(const Graph& g, const ListAssignment& lists);

/// Proper, total, and inside the lists.
bool is_proper_list_coloring(const Graph& g, const ListAssignment& lists, const Coloring& c);

/// True iff every list has at least k colours and no L-colouring exists,
/// which certifies that g is not k-choosable.
bool verify_choosability_witness(const Graph& g, const ListAssignment& lists, std::size_t k);

/// Same solver with the identical lists {0..k-1}.
std::size_t chromatic_number(const Graph& g);

struct ChoosabilityResult {
  bool choosable = true;
  /// Lists of size k with no colouring, when not choosable.
  std::optional<ListAssignment> witness;
  std::uint64_t assignments_checked = 0;
};

/// Decides k-choosability exactly.
///
/// Colour universe: a k-list assignment on n vertices uses at most k·n
/// colours, and colourability depends only on which vertex set carries each
/// colour, so enumerating the multiset of colour classes {v : c in L(v)} covers
/// every assignment up to renaming.
///
/// Reductions, all exact:
///  - a vertex of degree < k can always be coloured last, so only induced
///    subgraphs with minimum degree >= k need checking;
///  - in an inclusion-minimal uncolourable pair (H, L) no vertex has a colour
///    missing from all its neighbours' lists, so every colour class induces a
///    subgraph of H without isolated vertices;
///  - a candidate subgraph whose edge polynomial prod (x_u - x_v) has a nonzero
///    monomial with all exponents below k is k-choosable by the Combinatorial
///    Nullstellensatz and is skipped.
/// Classes are generated grouped by their lowest vertex, nondecreasing within a
/// group, which is a canonical order for the multiset. Guarded to v(g) <= 8.
ChoosabilityResult decide_choosability(const Graph& g, std::size_t k, bool use_nullstellensatz = true);

/// Exact list chromatic number, scanning k upward from χ(g); degeneracy + 1 is
/// always enough so the scan stops there. Guarded to v(g) <= 8.
std::size_t list_chromatic_number(const Graph& g);

}  // namespace forge
