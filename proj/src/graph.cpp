#include "forge/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace forge {

Graph::Graph(std::size_t n) {
  if (n > kMaxVertices) {
    throw std::length_error("graph order " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(kMaxVertices));
  }
  rows_.assign(n, VertexSet(n));
}

Graph::Graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= rows_.size())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(rows_.size()));
}

std::size_t Graph::size() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  rows_[static_cast<std::size_t>(u)].set(v);
  rows_[static_cast<std::size_t>(v)].set(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[static_cast<std::size_t>(u)].reset(v);
  rows_[static_cast<std::size_t>(v)].reset(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t u = 0; u < rows_.size(); ++u) {
    for (int v = rows_[u].next(static_cast<int>(u)); v != -1; v = rows_[u].next(v))
      out.emplace_back(static_cast<int>(u), v);
  }
  return out;
}

BipartiteGraph::BipartiteGraph(std::size_t a_size, std::size_t b_size)
    : a_size_(a_size), b_size_(b_size), rows_(a_size, VertexSet(b_size)) {}

void BipartiteGraph::add_edge(int a, int b) {
  if (a < 0 || static_cast<std::size_t>(a) >= a_size_ || b < 0 || static_cast<std::size_t>(b) >= b_size_)
    throw std::out_of_range("bipartite edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
  rows_[static_cast<std::size_t>(a)].set(b);
}

std::size_t BipartiteGraph::degree_b(int b) const {
  std::size_t d = 0;
  for (const auto& r : rows_) d += r.test(b) ? 1 : 0;
  return d;
}

std::size_t BipartiteGraph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t a = 0; a < a_size_; ++a) best = std::max(best, rows_[a].count());
  for (std::size_t b = 0; b < b_size_; ++b) best = std::max(best, degree_b(static_cast<int>(b)));
  return best;
}

std::size_t BipartiteGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& r : rows_) e += r.count();
  return e;
}

Graph BipartiteGraph::as_graph() const {
  Graph g(a_size_ + b_size_);
  for (std::size_t a = 0; a < a_size_; ++a)
    rows_[a].for_each([&](int b) { g.add_edge(static_cast<int>(a), static_cast<int>(a_size_) + b); });
  return g;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph out(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!g.has_edge(static_cast<int>(u), static_cast<int>(v))) out.add_edge(static_cast<int>(u), static_cast<int>(v));
  return out;
}

Graph bipartite_union_complement(const BipartiteGraph& b, const VertexSet& a_sub, const VertexSet& b_sub) {
  if (a_sub.universe() != b.a_size() || b_sub.universe() != b.b_size())
    throw std::out_of_range("part subsets do not match the bipartite part sizes");
  const auto as = a_sub.members();
  const auto bs = b_sub.members();
  const std::size_t na = as.size();
  Graph out(na + bs.size());
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = i + 1; j < bs.size(); ++j)
      out.add_edge(static_cast<int>(na + i), static_cast<int>(na + j));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < bs.size(); ++j)
      if (!b.has_edge(as[i], bs[j])) out.add_edge(static_cast<int>(i), static_cast<int>(na + j));
  return out;
}

InducedSubgraph induced_subgraph_with_map(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw std::invalid_argument("vertex set universe does not match the graph");
  InducedSubgraph out;
  out.original = s.members();
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) index[static_cast<std::size_t>(out.original[i])] = static_cast<int>(i);
  out.graph = Graph(out.original.size());
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    const auto nbrs = g.neighbors(out.original[i]) & s;
    nbrs.for_each([&](int w) {
      const int j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), j);
    });
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) { return induced_subgraph_with_map(g, s).graph; }

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int off = static_cast<int>(g.order());
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + off, v + off);
  return out;
}

Graph add_isolated(const Graph& g, std::size_t k) { return disjoint_union(g, Graph(k)); }

std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t v = 0; v < g.order(); ++v) best = std::min(best, g.degree(static_cast<int>(v)));
  return best;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.order(); ++v) best = std::max(best, g.degree(static_cast<int>(v)));
  return best;
}

std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b)) throw std::invalid_argument("edges_between needs disjoint sets");
  std::size_t e = 0;
  a.for_each([&](int v) { e += (g.neighbors(v) & b).count(); });
  return e;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](int v) {
    if (!ok) return;
    VertexSet others = s;
    others.reset(v);
    if (!others.is_subset_of(g.neighbors(v))) ok = false;
  });
  return ok;
}

VertexSet reach_within(const Graph& g, int from, const VertexSet& within) {
  VertexSet seen(g.order());
  seen.set(from);
  VertexSet frontier = seen;
  while (frontier.any()) {
    VertexSet next(g.order());
    frontier.for_each([&](int v) { next |= g.neighbors(v); });
    next &= within;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool induces_connected(const Graph& g, const VertexSet& s) {
  const int start = s.first();
  if (start == -1) return false;
  return reach_within(g, start, s) == s;
}

bool is_connected(const Graph& g) { return g.order() == 0 || induces_connected(g, g.all()); }

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.all();
  for (int v = left.first(); v != -1; v = left.first()) {
    VertexSet comp = reach_within(g, v, left);
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

Degeneracy degeneracy(const Graph& g) {
  const std::size_t n = g.order();
  Degeneracy out;
  out.order.reserve(n);
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(static_cast<int>(v));
  std::vector<bool> removed(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && (pick == n || deg[v] < deg[pick])) pick = v;
    out.value = std::max(out.value, deg[pick]);
    removed[pick] = true;
    out.order.push_back(static_cast<int>(pick));
    g.neighbors(static_cast<int>(pick)).for_each([&](int w) {
      if (!removed[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
    });
  }
  return out;
}

namespace {

// Unit-capacity flow network on the vertex-split digraph: v_in = 2v, v_out = 2v+1.
class SplitFlow {
 public:
  SplitFlow(const Graph& g, int s, int t) : head_(2 * g.order(), -1) {
    const int n = static_cast<int>(g.order());
    for (int v = 0; v < n; ++v) {
      const int cap = (v == s || v == t) ? n : 1;
      add_arc(2 * v, 2 * v + 1, cap);
    }
    for (auto [u, v] : g.edges()) {
      add_arc(2 * u + 1, 2 * v, 1);
      add_arc(2 * v + 1, 2 * u, 1);
    }
  }

  std::size_t max_flow(int source, int sink) {
    std::size_t flow = 0;
    std::vector<int> parent_arc(head_.size());
    while (true) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::deque<int> queue{source};
      parent_arc[static_cast<std::size_t>(source)] = -2;
      while (!queue.empty() && parent_arc[static_cast<std::size_t>(sink)] == -1) {
        const int x = queue.front();
        queue.pop_front();
        for (int a = head_[static_cast<std::size_t>(x)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
          const Arc& arc = arcs_[static_cast<std::size_t>(a)];
          if (arc.cap > 0 && parent_arc[static_cast<std::size_t>(arc.to)] == -1) {
            parent_arc[static_cast<std::size_t>(arc.to)] = a;
            queue.push_back(arc.to);
          }
        }
      }
      if (parent_arc[static_cast<std::size_t>(sink)] == -1) return flow;
      for (int x = sink; x != source;) {
        const int a = parent_arc[static_cast<std::size_t>(x)];
        arcs_[static_cast<std::size_t>(a)].cap -= 1;
        arcs_[static_cast<std::size_t>(a ^ 1)].cap += 1;
        x = arcs_[static_cast<std::size_t>(a ^ 1)].to;
      }
      ++flow;
    }
  }

 private:
  struct Arc {
    int to;
    int cap;
    int next;
  };

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, cap, head_[static_cast<std::size_t>(from)]});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[static_cast<std::size_t>(to)]});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

std::size_t local_connectivity(const Graph& g, int s, int t) {
  if (s == t || g.has_edge(s, t)) throw std::invalid_argument("local connectivity needs distinct non-adjacent vertices");
  SplitFlow net(g, s, t);
  return net.max_flow(2 * s + 1, 2 * t);
}

std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("vertex connectivity of the empty graph is undefined");
  if (n == 1) return 0;
  if (!is_connected(g)) return 0;
  std::size_t best = n - 1;
  // Even's scheme: a minimum separator misses one of the first best+1 vertices.
  for (std::size_t i = 0; i <= best && i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.has_edge(static_cast<int>(i), static_cast<int>(j))) continue;
      best = std::min(best, local_connectivity(g, static_cast<int>(i), static_cast<int>(j)));
    }
  }
  return best;
}

namespace {

bool extend_clique(const Graph& g, VertexSet& chosen, std::size_t size, const VertexSet& candidates,
                   std::size_t k) {
  if (size == k) return true;
  if (size + candidates.count() < k) return false;
  for (int v = candidates.first(); v != -1; v = candidates.next(v)) {
    VertexSet rest = candidates & g.neighbors(v);
    // only later vertices, so each clique is reached once in ascending order
    VertexSet later(g.order());
    for (int w = rest.next(v); w != -1; w = rest.next(w)) later.set(w);
    chosen.set(v);
    if (extend_clique(g, chosen, size + 1, later, k)) return true;
    chosen.reset(v);
  }
  return false;
}

}  // namespace

std::optional<VertexSet> find_clique(const Graph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("clique size must be at least 1");
  if (k > g.order()) return std::nullopt;
  VertexSet chosen(g.order());
  if (extend_clique(g, chosen, 0, g.all(), k)) return chosen;
  return std::nullopt;
}

std::size_t clique_number(const Graph& g) {
  std::size_t k = 0;
  while (k < g.order() && find_clique(g, k + 1)) ++k;
  return k;
}

bool turan_threshold_exceeded(const Graph& g, std::size_t k) {
  if (k < 2) throw std::invalid_argument("Turan threshold needs k >= 2");
  // e > (1 - 1/(k-1)) n^2 / 2  <=>  2 e (k-1) > (k-2) n^2
  using u128 = unsigned __int128;
  const u128 n = g.order();
  const u128 lhs = u128{2} * g.size() * (k - 1);
  const u128 rhs = u128{k - 2} * n * n;
  return lhs > rhs;
}

}  // namespace forge
