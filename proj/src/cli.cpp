#include "forge/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "forge/bounds.hpp"
#include "forge/coloring.hpp"
#include "forge/config.hpp"
#include "forge/constructions.hpp"
#include "forge/errors.hpp"
#include "forge/graph_io.hpp"
#include "forge/pipelines.hpp"
#include "forge/properties.hpp"
#include "forge/random.hpp"
#include "forge/report.hpp"

namespace forge {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

VertexSet parse_set(std::size_t universe, const std::string& text) {
  VertexSet s(universe);
  for (const int v : parse_int_list(text)) {
    if (v < 0 || static_cast<std::size_t>(v) >= universe) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    s.set(v);
  }
  return s;
}

/// Inline JSON or a path to a JSON file.
Json read_json_argument(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    return Json::parse(in);
  }
  return Json::parse(arg);
}

struct PipelineFlags {
  std::string config;
  std::string graph;
  std::string epsilon, delta, p, d;
  std::size_t n = 0, k = 0, attempts = 0, samples = 0, max_order = 0;
  std::uint64_t seed = 0;
  std::string out;
};

void add_pipeline_options(CLI::App* sub, PipelineFlags& f) {
  sub->add_option("--config", f.config, "INI or JSON experiment config");
  sub->add_option("--graph", f.graph, "input graph: file, g6:<code> or name");
  sub->add_option("--epsilon", f.epsilon);
  sub->add_option("--delta", f.delta);
  sub->add_option("--p", f.p);
  sub->add_option("--D", f.d, "override for the property Q constant");
  sub->add_option("--n", f.n);
  sub->add_option("-k", f.k, "isolated vertices to add");
  sub->add_option("--seed", f.seed);
  sub->add_option("--attempts", f.attempts);
  sub->add_option("--samples", f.samples);
  sub->add_option("--max-order", f.max_order);
  sub->add_option("--out", f.out, "run directory for report.json and summary.csv");
}

ExperimentConfig config_from_flags(const std::string& pipeline, const PipelineFlags& f, const CLI::App* sub) {
  ExperimentConfig c;
  if (!f.config.empty()) c = load_config(f.config);
  if (!c.pipeline.empty() && c.pipeline != pipeline)
    throw CLI::ValidationError("--config", "config is for pipeline " + c.pipeline + ", not " + pipeline);
  c.pipeline = pipeline;
  auto given = [&](const char* name) { return sub->count(name) > 0; };
  if (given("--graph")) c.graphs = {f.graph};
  if (given("--epsilon")) c.epsilon = parse_rational(f.epsilon);
  if (given("--delta")) c.delta = parse_rational(f.delta);
  if (given("--p")) c.p = parse_rational(f.p);
  if (given("--D")) c.d_override = parse_rational(f.d);
  if (given("--n")) c.n = f.n;
  if (given("-k")) c.k = f.k;
  if (given("--seed")) c.seed = f.seed;
  if (given("--attempts")) c.attempts = f.attempts;
  if (given("--samples")) c.samples = f.samples;
  if (given("--max-order")) c.max_sample_order = f.max_order;
  if (given("--out")) c.output_dir = f.out;
  if (pipeline != "mader" && !c.seed) throw CLI::RequiredError("--seed (randomized pipeline)");
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(pipeline, e.what());
  }
  return c;
}

Json run_and_persist(const ExperimentConfig& cfg) {
  std::optional<DirectoryLock> lock;
  if (!cfg.output_dir.empty()) lock.emplace(cfg.output_dir);
  const RunReport report = run_pipeline(cfg);
  if (lock) persist_report(report, cfg.output_dir);
  return report.to_json(true);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"forge: list colouring, minors and pasting constructions on small graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version_string());

  // Each handler fills result; exit_code is changed only by replay.
  Json result;
  int exit_code = 0;
  std::function<void()> action;

  // sample
  auto* sample = app.add_subcommand("sample", "seeded random graphs");
  sample->require_subcommand(1);
  std::size_t s_n = 0, s_m = 0, s_rows = 0, s_cols = 0;
  std::uint64_t s_seed = 0;
  std::string s_algo = "sequential", s_p;
  auto* gnm = sample->add_subcommand("gnm", "uniform graph with n vertices and m edges");
  gnm->add_option("--n", s_n)->required();
  gnm->add_option("--m", s_m)->required();
  gnm->add_option("--seed", s_seed)->required();
  gnm->add_option("--algo", s_algo)->check(CLI::IsMember({"sequential", "uniform"}));
  gnm->callback([&] { result = run_operation("sample_gnm", Json::object(), {{"n", s_n}, {"m", s_m}, {"seed", s_seed}, {"algo", s_algo}}); });
  auto* bip = sample->add_subcommand("bipartite", "G(rows, cols; p)");
  bip->add_option("--rows", s_rows)->required();
  bip->add_option("--cols", s_cols)->required();
  bip->add_option("--p", s_p)->required();
  bip->add_option("--seed", s_seed)->required();
  bip->callback([&] {
    const BipartiteGraph b = sample_bipartite(s_rows, s_cols, parse_rational(s_p), s_seed);
    result = {{"graph", graph_to_json(b.as_graph())}, {"rows", s_rows}, {"cols", s_cols}, {"edges", b.edge_count()},
              {"max_degree", b.max_degree()}};
  });

  // check-minor
  auto* minor = app.add_subcommand("check-minor", "exact minor containment");
  std::string host, pattern;
  minor->add_option("--host", host)->required();
  minor->add_option("--pattern", pattern)->required();
  minor->callback([&] {
    const Graph h = resolve_graph_argument(host);
    const Graph p = resolve_graph_argument(pattern);
    result = run_operation("contains_minor", {{"host", graph_to_json(h)}, {"pattern", graph_to_json(p)}}, Json::object());
    if (result.at("contains").get<bool>()) {
      MinorModel m;
      for (const auto& [key, members] : result.at("model").items())
        m.branch_sets[std::stoi(key)] = set_from_json(h.order(), members);
      result["model_verified"] = verify_model(h, p, m).valid;
    }
  });

  // check-choosability
  auto* choose = app.add_subcommand("check-choosability", "k-choosability or colouring from given lists");
  std::string c_graph, c_lists;
  std::size_t c_k = 0;
  choose->add_option("--graph", c_graph)->required();
  auto* k_opt = choose->add_option("-k", c_k, "list size");
  auto* lists_opt = choose->add_option("--lists", c_lists, "JSON {\"lists\": [[...], ...]} inline or as a file");
  k_opt->excludes(lists_opt);
  choose->callback([&] {
    const Graph g = resolve_graph_argument(c_graph);
    if (choose->count("--lists")) {
      const Json j = read_json_argument(c_lists);
      const ListAssignment lists(j.at("lists").get<std::vector<std::vector<int>>>());
      const auto c = is_l_colorable(g, lists);
      result = {{"colorable", c.has_value()}, {"coloring", c ? Json(*c) : Json(nullptr)}};
      return;
    }
    if (!choose->count("-k")) throw CLI::RequiredError("-k or --lists");
    const auto r = decide_choosability(g, c_k);
    result = {{"choosable", r.choosable}, {"k", c_k}, {"assignments_checked", r.assignments_checked}};
    result["witness"] = r.witness ? Json(r.witness->lists()) : Json(nullptr);
  });

  // check-property
  auto* prop = app.add_subcommand("check-property", "properties P and Q");
  prop->require_subcommand(1);
  std::string pr_graph, pr_pattern, pr_delta, pr_d, pr_mode = "exact";
  std::size_t pr_rows = 0;
  std::uint64_t pr_s = 1, pr_budget = 50'000'000, pr_seed = 0;
  bool pr_full = false;
  auto* pp = prop->add_subcommand("p", "property P of a bipartite host relative to a pattern");
  pp->add_option("--graph", pr_graph, "bipartite host; the first --rows vertices form one side")->required();
  pp->add_option("--rows", pr_rows)->required();
  pp->add_option("--pattern", pr_pattern)->required();
  pp->add_option("--delta", pr_delta)->required();
  pp->add_option("--s", pr_s);
  pp->add_option("--mode", pr_mode)->check(CLI::IsMember({"exact", "falsify"}));
  pp->add_option("--budget", pr_budget);
  pp->add_option("--seed", pr_seed);
  pp->callback([&] {
    const Graph g = resolve_graph_argument(pr_graph);
    if (pr_rows > g.order()) throw std::invalid_argument("--rows exceeds the graph order");
    BipartiteGraph b(pr_rows, g.order() - pr_rows);
    for (auto [u, v] : g.edges()) {
      if ((static_cast<std::size_t>(u) < pr_rows) == (static_cast<std::size_t>(v) < pr_rows))
        throw std::invalid_argument("edge inside one side of the bipartition");
      b.add_edge(u, v - static_cast<int>(pr_rows));
    }
    if (pr_mode == "falsify" && !pp->count("--seed")) throw CLI::RequiredError("--seed (falsify mode)");
    const CheckMode mode = pr_mode == "exact" ? CheckMode::exact(pr_budget) : CheckMode::falsify(pr_budget, pr_seed);
    const auto r = check_property_P(b, resolve_graph_argument(pr_pattern), {parse_rational(pr_delta), pr_s}, mode);
    result = {{"verdict", to_string(r.verdict)}, {"effort", r.effort}};
    if (r.witness) {
      Json xs = Json::array(), ys = Json::array();
      for (const auto& x : r.witness->x_sets) xs.push_back(set_to_json(x));
      for (const auto& y : r.witness->y_sets) ys.push_back(set_to_json(y));
      result["witness"] = {{"xs", r.witness->xs}, {"ys", r.witness->ys}, {"x_sets", xs}, {"y_sets", ys}};
    } else {
      result["witness"] = nullptr;
    }
  });
  auto* pq = prop->add_subcommand("q", "property Q");
  pq->add_option("--graph", pr_graph)->required();
  pq->add_option("--delta", pr_delta)->required();
  pq->add_option("--D", pr_d)->required();
  pq->add_flag("--full", pr_full, "enumerate all set sizes, not just the minimal ones");
  pq->callback([&] {
    const Graph g = resolve_graph_argument(pr_graph);
    const PropertyQParams q{parse_rational(pr_delta), parse_rational(pr_d)};
    const auto r = pr_full ? check_property_Q_full(g, q) : check_property_Q(g, q);
    result = {{"verdict", to_string(r.verdict)}, {"threshold", r.threshold}, {"effort", r.effort}};
    if (r.witness)
      result["witness"] = {{"a", set_to_json(r.witness->a)}, {"b", set_to_json(r.witness->b)}, {"edges", r.witness->edges}};
    else
      result["witness"] = nullptr;
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "probability bounds and constants");
  bounds->require_subcommand(1);
  std::string b_mu, b_delta, b_p, b_d, b_c, b_tail = "upper";
  std::uint64_t b_n = 0;
  auto* ch = bounds->add_subcommand("chernoff", "Chernoff tail bound");
  ch->add_option("--mu", b_mu)->required();
  ch->add_option("--delta", b_delta)->required();
  ch->add_option("--tail", b_tail)->check(CLI::IsMember({"upper", "lower"}));
  ch->callback([&] {
    const Rational mu = parse_rational(b_mu), delta = parse_rational(b_delta);
    result = {{"bound", float_to_json(b_tail == "upper" ? chernoff_upper(mu, delta) : chernoff_lower(mu, delta))},
              {"tail", b_tail}};
  });
  auto* cs = bounds->add_subcommand("constants", "D, C, m and the failure bounds");
  cs->add_option("--delta", b_delta)->required();
  cs->add_option("--p", b_p)->required();
  cs->add_option("--D", b_d, "override D");
  cs->add_option("--n", b_n)->required();
  cs->callback([&] {
    Json params = {{"delta", b_delta}, {"p", b_p}, {"n", b_n}};
    params["D"] = cs->count("--D") ? Json(b_d) : Json(nullptr);
    result = run_operation("constants", Json::object(), params);
  });
  auto* qn = bounds->add_subcommand("qn", "success probability bound for the sampled pattern");
  qn->add_option("--delta", b_delta)->required();
  qn->add_option("--p", b_p)->required();
  qn->add_option("--D", b_d)->required();
  qn->add_option("--n", b_n)->required();
  qn->callback([&] {
    const Rational delta = parse_rational(b_delta), p = parse_rational(b_p), d = parse_rational(b_d);
    const auto e = q_n_exponent(delta, p, d);
    result = {{"exponent", float_to_json(to_double(e.value))},
              {"exponent_negative", e.value < 0},
              {"exact", e.exact},
              {"bound", float_to_json(q_n_bound(delta, p, d, b_n))}};
  });
  auto* pqb = bounds->add_subcommand("propq", "failure bound for property Q");
  pqb->add_option("--D", b_d)->required();
  pqb->add_option("--n", b_n)->required();
  pqb->callback([&] { result = {{"bound", float_to_json(propQ_failure_bound(parse_rational(b_d), b_n))}}; });
  auto* mb = bounds->add_subcommand("m", "edge count ceil(C n ln n), clamped");
  mb->add_option("--C", b_c)->required();
  mb->add_option("--n", b_n)->required();
  mb->callback([&] {
    const auto m = m_of(b_n, parse_rational(b_c));
    result = {{"m", m.value}, {"unclamped", m.unclamped}, {"clamped", m.clamped}};
  });

  // pasting
  auto* paste = app.add_subcommand("pasting", "materialize the K-fold pasting of F along S");
  std::string pa_graph, pa_attach, pa_b, pa_write;
  std::size_t pa_k = 0, pa_d = 0;
  paste->add_option("--graph", pa_graph)->required();
  paste->add_option("--attach", pa_attach, "comma-separated vertices of S")->required();
  paste->add_option("-K", pa_k)->required();
  paste->add_option("--write", pa_write, "also write the graph6 to this file");
  paste->callback([&] {
    const Graph f = resolve_graph_argument(pa_graph);
    const Graph g = k_fold_pasting({f, parse_set(f.order(), pa_attach), pa_k});
    if (!pa_write.empty()) write_graph_file(pa_write, g);
    result = {{"graph", graph_to_json(g)}, {"order", g.order()}, {"edges", g.size()}};
  });

  // verify-pasting-bound
  auto* vpb = app.add_subcommand("verify-pasting-bound", "certify chi_l(F^(K)) >= |A|+|B|-d");
  vpb->add_option("--graph", pa_graph)->required();
  vpb->add_option("--part-a", pa_attach)->required();
  vpb->add_option("--part-b", pa_b)->required();
  vpb->add_option("-d", pa_d)->required();
  vpb->callback([&] {
    const Graph f = resolve_graph_argument(pa_graph);
    result = run_operation("pasting_bound", {{"f", graph_to_json(f)}},
                           {{"a", parse_int_list(pa_attach)}, {"b", parse_int_list(pa_b)}, {"d", pa_d}});
  });

  // pipeline
  auto* pipe = app.add_subcommand("pipeline", "end-to-end runs writing a report");
  pipe->require_subcommand(1);
  PipelineFlags flags;
  for (const char* name : {"conn", "random", "isolated", "mader"}) {
    auto* sub = pipe->add_subcommand(name);
    add_pipeline_options(sub, flags);
    const std::string id = name;
    sub->callback([&, sub, id] { action = [&, sub, id] { result = run_and_persist(config_from_flags(id, flags, sub)); }; });
  }

  // replay
  auto* replay = app.add_subcommand("replay", "re-run the steps of a stored report and check its claims");
  std::string report_path;
  replay->add_option("--report", report_path)->required()->check(CLI::ExistingFile);
  replay->callback([&] {
    std::ifstream in(report_path);
    const auto outcome = replay_report(Json::parse(in));
    result = outcome.to_json();
    if (!outcome.ok()) exit_code = 3;
  });

  try {
    app.parse(argc, argv);
    if (action) action();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  out << result.dump(2) << '\n';
  return exit_code;
}

}  // namespace forge
