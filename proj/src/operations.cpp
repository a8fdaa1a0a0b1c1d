#include "forge/operations.hpp"

#include <bit>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>

#include "forge/bounds.hpp"
#include "forge/coloring.hpp"
#include "forge/constructions.hpp"
#include "forge/errors.hpp"
#include "forge/graph_io.hpp"
#include "forge/guards.hpp"
#include "forge/properties.hpp"
#include "forge/random.hpp"

namespace forge {

Json graph_to_json(const Graph& g) { return to_graph6(g); }
Graph graph_from_json(const Json& j) { return from_graph6(j.get<std::string>()); }

Json set_to_json(const VertexSet& s) { return s.members(); }

VertexSet set_from_json(std::size_t universe, const Json& j) {
  VertexSet s(universe);
  for (const auto& v : j) {
    const int x = v.get<int>();
    if (x < 0 || static_cast<std::size_t>(x) >= universe) throw std::out_of_range("vertex " + std::to_string(x) + " out of range");
    s.set(x);
  }
  return s;
}

Json model_to_json(const MinorModel& m) {
  Json out = Json::object();
  for (const auto& [v, set] : m.branch_sets) out[std::to_string(v)] = set_to_json(set);
  return out;
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  // shortest round-trip text, so 0.3 reads as 3/10
  if (j.is_number()) return parse_rational(j.dump());
  throw std::invalid_argument("expected a rational, got " + j.dump());
}

Json float_to_json(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::stod(buf);
}

namespace {

using Op = std::function<Json(const Json&, const Json&)>;

Json attempts_to_json(const std::vector<GadgetAttempt>& attempts) {
  Json out = Json::array();
  for (const auto& a : attempts) {
    Json rec = {{"attempt", a.attempt}, {"seed", a.seed}, {"max_degree", a.max_degree}, {"degree_ok", a.degree_ok}};
    rec["minor_free"] = a.minor_free ? Json(*a.minor_free) : Json(nullptr);
    out.push_back(rec);
  }
  return out;
}

Json gadget_to_json(const Gadget& g) {
  return {{"f", graph_to_json(g.f)},
          {"a", set_to_json(g.part.a)},
          {"b", set_to_json(g.part.b)},
          {"d", g.part.d},
          {"realized_d", realized_slack(g.f, g.part.a, g.part.b)},
          {"seed", g.seed}};
}

Json op_vertex_connectivity(const Json& in, const Json&) {
  return {{"value", vertex_connectivity(graph_from_json(in.at("graph")))}};
}

Json op_contains_minor(const Json& in, const Json&) {
  const Graph host = graph_from_json(in.at("host"));
  const Graph pattern = graph_from_json(in.at("pattern"));
  MinorSearchStats stats;
  const auto model = contains_minor(host, pattern, &stats);
  Json out = {{"contains", model.has_value()}, {"nodes", stats.nodes}, {"exhaustive", !model.has_value()}};
  out["model"] = model ? model_to_json(*model) : Json(nullptr);
  return out;
}

Json op_gadget_conn(const Json& in, const Json& params) {
  const Graph h = graph_from_json(in.at("h"));
  const auto out = build_thm_conn_gadget(h, rational_from_json(params.at("epsilon")), params.at("seed").get<std::uint64_t>(),
                                         params.at("attempts").get<std::size_t>());
  Json j = {{"found", out.gadget.has_value()},
            {"a_size", out.a_size},
            {"b_size", out.b_size},
            {"nominal_d", out.nominal_d},
            {"p", rational_to_json(out.p)},
            {"connectivity", out.connectivity},
            {"low_connectivity", out.low_connectivity},
            {"attempts", attempts_to_json(out.attempts)}};
  j["gadget"] = out.gadget ? gadget_to_json(*out.gadget) : Json(nullptr);
  return j;
}

Json op_gadget_random(const Json& in, const Json& params) {
  const Graph h = graph_from_json(in.at("h"));
  std::optional<Rational> p;
  if (params.contains("p") && !params.at("p").is_null()) p = rational_from_json(params.at("p"));
  const auto out = build_thm_random_gadget(h, rational_from_json(params.at("delta")), p,
                                           params.at("seed").get<std::uint64_t>(), params.at("attempts").get<std::size_t>());
  Json j = {{"found", out.gadget.has_value()},
            {"a_size", out.a_size},
            {"b_size", out.b_size},
            {"nominal_d", out.nominal_d},
            {"p", rational_to_json(out.p)},
            {"subsets_checked", out.subsets_checked},
            {"attempts", attempts_to_json(out.attempts)}};
  j["gadget"] = out.gadget ? gadget_to_json(*out.gadget) : Json(nullptr);
  // the last sample that passed the degree test, kept for the pasting checks
  j["candidate"] = nullptr;
  for (auto it = out.attempts.rbegin(); it != out.attempts.rend(); ++it) {
    if (!it->degree_ok) continue;
    const BipartiteGraph g = sample_bipartite(out.a_size, out.b_size, out.p, it->seed);
    Gadget c;
    c.f = bipartite_union_complement(g, VertexSet::full(out.a_size), VertexSet::full(out.b_size));
    c.part.a = VertexSet(2 * out.a_size);
    for (std::size_t v = 0; v < out.a_size; ++v) c.part.a.set(static_cast<int>(v));
    c.part.b = VertexSet::full(2 * out.a_size) - c.part.a;
    c.part.d = out.nominal_d;
    c.seed = it->seed;
    j["candidate"] = gadget_to_json(c);
    break;
  }
  return j;
}

Json op_gadget_shape(const Json& in, const Json& params) {
  const Graph f = graph_from_json(in.at("f"));
  const Graph h = graph_from_json(in.at("h"));
  const VertexSet a = set_from_json(f.order(), params.at("a"));
  const VertexSet b = set_from_json(f.order(), params.at("b"));
  const Rational allowed = rational_from_json(params.at("epsilon")) * h.order();
  std::size_t worst = 0;
  b.for_each([&](int v) { worst = std::max(worst, f.order() - 1 - f.degree(v)); });
  const bool partition = !a.intersects(b) && (a | b) == f.all();
  const bool sizes = a.count() == params.at("a_size").get<std::size_t>() && b.count() == params.at("b_size").get<std::size_t>();
  const bool cliques = is_clique(f, a) && is_clique(f, b);
  const bool sparse = Rational(worst) <= allowed;
  return {{"partition", partition},
          {"sizes", sizes},
          {"a_clique", is_clique(f, a)},
          {"b_clique", is_clique(f, b)},
          {"max_b_non_neighbors", worst},
          {"allowed_non_neighbors", rational_to_json(allowed)},
          {"two_cliques", partition && sizes && cliques},
          {"sparse_cross", sparse},
          {"exhaustive", true}};
}

Json op_pasting_bound(const Json& in, const Json& params) {
  const Graph f = graph_from_json(in.at("f"));
  const TwoCliquePartition part{set_from_json(f.order(), params.at("a")), set_from_json(f.order(), params.at("b")),
                                params.at("d").get<std::size_t>()};
  const auto r = verify_pasting_lower_bound(f, part);
  Json out = {{"certified", r.certified},
              {"bound", r.bound},
              {"copies", r.copies.str()},
              {"colorings_checked", r.colorings_checked},
              {"exhaustive", true}};
  if (r.counterexample)
    out["counterexample"] = {{"a_colors", r.counterexample->a_colors}, {"extension", r.counterexample->extension}};
  else
    out["counterexample"] = nullptr;
  return out;
}

Json op_sample_gnm(const Json&, const Json& params) {
  const auto n = params.at("n").get<std::size_t>();
  const auto m = params.at("m").get<std::size_t>();
  const auto seed = params.at("seed").get<std::uint64_t>();
  const std::string algo = params.value("algo", "sequential");
  Graph g;
  if (algo == "sequential")
    g = sample_gnm_sequential(n, m, seed);
  else if (algo == "uniform")
    g = sample_gnm_uniform(n, m, seed);
  else
    throw std::invalid_argument("unknown G(n;m) algorithm '" + algo + "'");
  return {{"graph", graph_to_json(g)}, {"edges", g.size()}};
}

Json op_property_q(const Json& in, const Json& params) {
  const Graph h = graph_from_json(in.at("h"));
  const PropertyQParams q{rational_from_json(params.at("delta")), rational_from_json(params.at("D"))};
  const auto r = check_property_Q(h, q);
  Json out = {{"verdict", to_string(r.verdict)}, {"threshold", r.threshold}, {"effort", r.effort}, {"exhaustive", true}};
  if (r.witness)
    out["witness"] = {{"a", set_to_json(r.witness->a)}, {"b", set_to_json(r.witness->b)}, {"edges", r.witness->edges}};
  else
    out["witness"] = nullptr;
  return out;
}

Json op_induced_minor_sweep(const Json& in, const Json& params) {
  const Graph f = graph_from_json(in.at("f"));
  const Graph h = graph_from_json(in.at("h"));
  const auto size = params.at("size").get<std::size_t>();
  Json out = {{"exhaustive", true}, {"first_minor_subset", nullptr}, {"model", nullptr}};
  std::size_t checked = 0;
  for (const auto& u : subsets_of_size(h.order(), size)) {
    ++checked;
    if (auto m = contains_minor(f, induced_subgraph(h, u))) {
      out["first_minor_subset"] = set_to_json(u);
      out["model"] = model_to_json(*m);
      break;
    }
  }
  out["subsets"] = checked;
  out["minor_free_all"] = out["first_minor_subset"].is_null();
  return out;
}

Json op_pasting_transfer(const Json& in, const Json& params) {
  const Graph f = graph_from_json(in.at("f"));
  const Graph h = graph_from_json(in.at("h"));
  const PastingSpec spec{f, set_from_json(f.order(), params.at("attach")), params.at("copies").get<std::size_t>()};
  const Graph big = k_fold_pasting(spec);
  const bool big_has = contains_minor(big, h).has_value();
  bool f_has = false;
  for (const auto& u : subsets_of_size(h.order(), params.at("size").get<std::size_t>()))
    if (contains_minor(f, induced_subgraph(h, u))) {
      f_has = true;
      break;
    }
  return {{"order", big.order()},
          {"pasting_contains_h", big_has},
          {"f_contains_some_hu", f_has},
          {"implication_holds", !big_has || f_has},
          {"exhaustive", true}};
}

Json op_constants(const Json&, const Json& params) {
  const Rational delta = rational_from_json(params.at("delta"));
  const Rational p = rational_from_json(params.at("p"));
  const auto n = params.at("n").get<std::uint64_t>();
  ConstantValue d = constant_D(delta, p);
  const bool override_d = params.contains("D") && !params.at("D").is_null();
  if (override_d) d = {rational_from_json(params.at("D")), true};
  const Rational c = d.value * d.value / (delta * delta);
  const auto m = m_of(n, c);
  const auto q_exp = q_n_exponent(delta, p, d.value);
  return {{"D", rational_to_json(d.value)},
          {"D_exact", d.exact},
          {"D_override", override_d},
          {"C", rational_to_json(c)},
          {"m", m.value},
          {"m_unclamped", m.unclamped},
          {"m_clamped", m.clamped},
          {"q_exponent", float_to_json(to_double(q_exp.value))},
          {"q_exponent_negative", q_exp.value < 0},
          {"q_bound", float_to_json(q_n_bound(delta, p, d.value, n))},
          {"propq_failure_bound", float_to_json(propQ_failure_bound(d.value, n))}};
}

Json op_isolated_sample(const Json& in, const Json& params) {
  const Graph f = graph_from_json(in.at("f"));
  const auto k = params.at("k").get<std::size_t>();
  const auto samples = params.at("samples").get<std::size_t>();
  const auto max_order = params.at("max_order").get<std::size_t>();
  const auto seed = params.at("seed").get<std::uint64_t>();
  const Graph h = add_isolated(f, k);
  const std::size_t vh = h.order();
  if (vh < 2) throw std::invalid_argument("H needs at least two vertices");
  if (max_order == 0) throw std::invalid_argument("max_order must be positive");
  const std::size_t list_size = vh - 1;

  std::size_t minor_free = 0;
  std::size_t degenerate_ok = 0;
  std::size_t coloring_ok = 0;
  Json violations = Json::array();
  Json kept = Json::array();
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, i));
    const std::size_t order = 1 + uniform_below(rng, max_order);
    const std::size_t m = uniform_below(rng, order * (order - 1) / 2 + 1);
    const Graph g = sample_gnm_uniform(order, m, rng());
    if (contains_minor(g, h)) continue;
    ++minor_free;
    kept.push_back(graph_to_json(g));
    const std::size_t deg = degeneracy(g).value;
    if (deg + 2 > vh) {
      violations.push_back({{"graph", graph_to_json(g)}, {"degeneracy", deg}});
      continue;
    }
    ++degenerate_ok;
    std::vector<int> palette(2 * list_size);
    for (std::size_t c = 0; c < palette.size(); ++c) palette[c] = static_cast<int>(c);
    std::vector<std::vector<int>> raw(order);
    for (auto& l : raw) {
      for (std::size_t t = palette.size(); t > 1; --t) std::swap(palette[t - 1], palette[uniform_below(rng, t)]);
      l.assign(palette.begin(), palette.begin() + static_cast<std::ptrdiff_t>(list_size));
    }
    const ListAssignment lists(std::move(raw));
    const auto c = color_by_degeneracy(g, lists);
    if (c && is_proper_list_coloring(g, lists, *c)) ++coloring_ok;
  }
  return {{"h", graph_to_json(h)},
          {"samples", samples},
          {"minor_free", minor_free},
          {"degenerate_ok", degenerate_ok},
          {"coloring_ok", coloring_ok},
          {"violations", violations},
          {"minor_free_graphs", kept},
          {"exhaustive", true}};
}

Json op_list_chromatic(const Json& in, const Json&) {
  const Graph g = graph_from_json(in.at("graph"));
  Json out = {{"chromatic", chromatic_number(g)},
              {"degeneracy_plus_one", g.order() ? degeneracy(g).value + 1 : 0},
              {"exhaustive", true}};
  out["list_chromatic"] = g.order() <= guard_limit(8) ? Json(list_chromatic_number(g)) : Json(nullptr);
  return out;
}

Json op_mader(const Json& in, const Json&) {
  const Graph h = graph_from_json(in.at("h"));
  const std::size_t n = h.order();
  enforce_guard("Mader check order", n, 9);
  const std::size_t e = h.size();
  const Rational avg = n ? Rational(2 * e, n) : Rational(0);
  const std::int64_t k = floor_to_int(avg / 4) + 1;
  std::size_t best = 0;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    const std::size_t kappa = vertex_connectivity(induced_subgraph(h, VertexSet::from_mask(n, mask)));
    if (kappa > best) {
      best = kappa;
      best_mask = mask;
    }
  }
  return {{"n", n},
          {"edges", e},
          {"average_degree", rational_to_json(avg)},
          {"k", k},
          {"target", ceil_to_int(avg / 4)},
          {"best_connectivity", best},
          {"best_subset", n ? set_to_json(VertexSet::from_mask(n, best_mask)) : Json::array()},
          {"k_connected_found", static_cast<std::int64_t>(best) >= k},
          {"pass", Rational(4 * best) >= avg},
          {"exhaustive", true}};
}

const std::map<std::string, Op>& registry() {
  static const std::map<std::string, Op> ops = {
      {"vertex_connectivity", op_vertex_connectivity},
      {"contains_minor", op_contains_minor},
      {"gadget_conn", op_gadget_conn},
      {"gadget_random", op_gadget_random},
      {"gadget_shape", op_gadget_shape},
      {"pasting_bound", op_pasting_bound},
      {"sample_gnm", op_sample_gnm},
      {"property_q", op_property_q},
      {"induced_minor_sweep", op_induced_minor_sweep},
      {"pasting_transfer", op_pasting_transfer},
      {"constants", op_constants},
      {"isolated_sample", op_isolated_sample},
      {"list_chromatic", op_list_chromatic},
      {"mader", op_mader},
  };
  return ops;
}

}  // namespace

Json run_operation(const std::string& op, const Json& inputs, const Json& params) {
  const auto& ops = registry();
  const auto it = ops.find(op);
  if (it == ops.end()) throw std::invalid_argument("unknown operation '" + op + "'");
  return it->second(inputs, params);
}

std::vector<std::string> operation_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

}  // namespace forge
