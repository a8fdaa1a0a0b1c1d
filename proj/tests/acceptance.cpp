// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <boost/math/distributions/chi_squared.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unistd.h>

#include "fixtures.hpp"
#include "forge/bounds.hpp"
#include "forge/cli.hpp"
#include "forge/coloring.hpp"
#include "forge/constructions.hpp"
#include "forge/graph_io.hpp"
#include "forge/minors.hpp"
#include "forge/named_graphs.hpp"
#include "forge/pipelines.hpp"
#include "forge/properties.hpp"
#include "forge/random.hpp"
#include "oracles.hpp"

using namespace forge;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Pearson statistic against the uniform distribution over `cells` outcomes.
double chi_square_uniform(const std::map<std::string, std::size_t>& counts, std::size_t cells, std::size_t total) {
  const double expected = static_cast<double>(total) / static_cast<double>(cells);
  double stat = 0;
  for (const auto& [key, c] : counts) stat += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
  stat += static_cast<double>(cells - counts.size()) * expected;
  return stat;
}

double critical(double df, double alpha) {
  const boost::math::chi_squared dist(df);
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

Outcome dual_minor_oracles() {
  const auto start = Clock::now();
  std::mt19937_64 rng(1001);
  std::size_t disagreements = 0, positives = 0;
  const std::size_t pairs = 500;
  for (std::size_t i = 0; i < pairs; ++i) {
    const Graph host = oracle::random_graph(1 + rng() % 7, static_cast<double>(rng() % 100) / 100.0, rng);
    const Graph pattern = oracle::random_graph(1 + rng() % 5, static_cast<double>(rng() % 100) / 100.0, rng);
    const auto model = contains_minor(host, pattern);
    if (model) ++positives;
    if (model.has_value() != contains_minor_contraction_oracle(host, pattern)) ++disagreements;
    if (model && !verify_model(host, pattern, *model).valid) ++disagreements;
  }
  const double t = seconds_since(start);
  return {disagreements == 0 && t <= 300,
          std::to_string(pairs) + " pairs, " + std::to_string(positives) + " positive, " + std::to_string(disagreements) +
              " disagreements"};
}

Outcome petersen_fixtures() {
  const Graph p = named::petersen();
  auto start = Clock::now();
  const auto k5 = contains_minor(p, named::complete(5));
  const double t5 = seconds_since(start);
  const bool k5_ok = k5 && verify_model(p, named::complete(5), *k5).valid && t5 <= 1;

  start = Clock::now();
  const bool k6 = contains_minor(p, named::complete(6)).has_value();
  const double t6 = seconds_since(start);

  // The contraction oracle is guarded below 10 host vertices. A K6 minor of
  // the Petersen graph other than itself survives one vertex deletion or one
  // edge contraction, and the Petersen graph is not K6.
  bool oracle_k6 = p == named::complete(6);
  for (int v = 0; v < 10 && !oracle_k6; ++v) {
    VertexSet keep = VertexSet::full(10);
    keep.reset(v);
    oracle_k6 = contains_minor_contraction_oracle(induced_subgraph(p, keep), named::complete(6));
  }
  for (auto [u, v] : p.edges()) {
    if (oracle_k6) break;
    Graph merged(9);
    auto image = [&](int x) { return x == v ? u : (x > v ? x - 1 : x); };
    for (auto [x, y] : p.edges())
      if (image(x) != image(y)) merged.add_edge(image(x), image(y));
    oracle_k6 = contains_minor_contraction_oracle(merged, named::complete(6));
  }
  std::ostringstream d;
  d.precision(3);
  d << "K5 found in " << t5 << " s, K6 " << (k6 ? "found" : "absent") << " in " << t6 << " s, oracle agrees: "
    << (k6 == oracle_k6 ? "yes" : "no");
  return {k5_ok && !k6 && !oracle_k6 && t6 <= 60, d.str()};
}

Outcome pasting_ground_truth() {
  const auto start = Clock::now();
  const auto fx = fixtures::small_pasting_fixtures(24);
  std::size_t mismatches = 0;
  bool has_1_2 = false, has_2_2_d1 = false;
  for (const auto& f : fx) {
    const auto a = f.part.a.members(), b = f.part.b.members();
    has_1_2 |= a.size() == 1 && b.size() == 2;
    has_2_2_d1 |= a.size() == 2 && b.size() == 2 && f.part.d == 1;
    const bool certified = verify_pasting_lower_bound(f.f, f.part).certified;
    if (certified == oracle::pasting_ground_truth_colorable(f.f, a, b)) ++mismatches;
  }
  const double t = seconds_since(start);
  return {mismatches == 0 && has_1_2 && has_2_2_d1 && t <= 120,
          std::to_string(fx.size()) + " fixtures, " + std::to_string(mismatches) + " mismatches"};
}

Outcome glue_closure() {
  const auto start = Clock::now();
  std::mt19937_64 rng(1004);
  const std::vector<Graph> patterns = {named::complete(4), named::complete(5), named::complete_bipartite(3, 3)};
  std::size_t good = 0;
  const std::size_t trials = 200;
  for (std::size_t i = 0; i < trials; ++i) {
    const Graph& h = patterns[i % patterns.size()];
    good += fixtures::glue_trial(rng, h, vertex_connectivity(h), 8).union_minor_free;
  }
  const double t = seconds_since(start);
  return {good == trials && t <= 600, std::to_string(good) + "/" + std::to_string(trials) + " sums H-minor-free"};
}

Outcome property_q_reduction() {
  std::mt19937_64 rng(1005);
  std::size_t disagreements = 0;
  for (int i = 0; i < 100; ++i) {
    const Graph h = oracle::random_graph(2 + rng() % 7, static_cast<double>(rng() % 100) / 100.0, rng);
    for (const Rational delta : {Rational(1, 4), Rational(1, 2)})
      for (const Rational d : {Rational(11, 10), Rational(3, 2)}) {
        const PropertyQParams q{delta, d};
        if (check_property_Q(h, q).verdict != check_property_Q_full(h, q).verdict) ++disagreements;
      }
  }
  // ⌈1.01·6·ln 6⌉ = 11 > 9 edges between two triangles; ⌈1.5·20·ln 20⌉ = 90 <= 100
  const auto k6 = check_property_Q(named::complete(6), {Rational(1, 2), Rational(101, 100)});
  const auto k20 = check_property_Q(named::complete(20), {Rational(1, 2), Rational(3, 2)});
  const bool hand = k6.verdict == Verdict::fails && k6.threshold == 11 && k6.witness && k6.witness->edges == 9 &&
                    k20.verdict == Verdict::holds && k20.threshold == 90;
  return {disagreements == 0 && hand,
          std::to_string(disagreements) + " disagreements over 400 checks, K6/K20 cases " + (hand ? "match" : "differ")};
}

Outcome chernoff_and_constants() {
  const double c = chernoff_upper(Rational(30), Rational(1));
  const bool chernoff = std::abs(c - std::exp(-10.0)) <= 1e-12 * std::exp(-10.0);

  bool c_exact = true;
  std::size_t sign_checks = 0, sign_fail = 0;
  for (const Rational delta : {Rational(1), Rational(1, 2), Rational(1, 3)}) {
    const auto power = floor_to_int(1 / (delta * delta));
    for (int pn = 1; pn <= 9; pn += 2) {
      const Rational p(pn, 10);
      const auto dv = constant_D(delta, p);
      c_exact &= dv.exact && constant_C(delta, p).value == dv.value * dv.value / (delta * delta);
      Rational threshold = 4;
      for (std::int64_t i = 0; i < power; ++i) threshold /= p;
      for (const Rational factor : {Rational(1, 2), Rational(99, 100), Rational(1), Rational(101, 100), Rational(3)}) {
        const Rational d = threshold * factor;
        const bool negative = q_n_exponent(delta, p, d).value < 0;
        ++sign_checks;
        if (negative != (d > threshold)) ++sign_fail;
        if ((q_n_bound(delta, p, d, 20) > 0) != negative) ++sign_fail;
      }
    }
  }
  std::ostringstream d;
  d << "exp(-10) relative error " << std::abs(c - std::exp(-10.0)) / std::exp(-10.0) << ", C exact: " << (c_exact ? "yes" : "no")
    << ", " << sign_checks << " sign checks, " << sign_fail << " failures";
  return {chernoff && c_exact && sign_fail == 0, d.str()};
}

Outcome sampler_uniformity() {
  const auto start = Clock::now();
  const std::size_t samples = 15000, cells = 15;  // C(6, 2) edge pairs of K4
  std::map<std::string, std::size_t> uni, seq;
  for (std::size_t i = 0; i < samples; ++i) {
    ++uni[to_graph6(sample_gnm_uniform(4, 2, derive_seed(77, i)))];
    ++seq[to_graph6(sample_gnm_sequential(4, 2, derive_seed(78, i)))];
  }
  const double crit = critical(static_cast<double>(cells - 1), 0.001);
  const double s_uni = chi_square_uniform(uni, cells, samples);
  const double s_seq = chi_square_uniform(seq, cells, samples);
  // homogeneity of the two samples, 2 x cells table with equal row totals
  double s_hom = 0;
  for (const auto& [key, cu] : uni) {
    const double cs = static_cast<double>(seq[key]);
    const double pooled = (static_cast<double>(cu) + cs) / 2;
    s_hom += (static_cast<double>(cu) - pooled) * (static_cast<double>(cu) - pooled) / pooled + (cs - pooled) * (cs - pooled) / pooled;
  }
  const bool support = uni.size() == cells && seq.size() == cells;
  const double t = seconds_since(start);
  std::ostringstream d;
  d.precision(4);
  d << "uniform " << s_uni << ", sequential " << s_seq << ", homogeneity " << s_hom << " vs critical " << crit;
  return {support && s_uni < crit && s_seq < crit && s_hom < crit && t <= 60, d.str()};
}

Outcome choosability_truths() {
  const auto start = Clock::now();
  const bool fixed = list_chromatic_number(named::complete(4)) == 4 && list_chromatic_number(named::cycle(4)) == 2 &&
                     list_chromatic_number(named::complete_bipartite(3, 3)) == 3 &&
                     !decide_choosability(named::complete(4), 3, false).choosable &&
                     decide_choosability(named::cycle(4), 2, false).choosable &&
                     !decide_choosability(named::cycle(4), 1, false).choosable &&
                     !decide_choosability(named::complete_bipartite(3, 3), 2, false).choosable &&
                     decide_choosability(named::complete_bipartite(3, 3), 3, false).choosable &&
                     oracle::choosable_by_enumeration(named::cycle(4), 2);
  std::mt19937_64 rng(1008);
  std::size_t violations = 0;
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(1 + rng() % 7, static_cast<double>(rng() % 100) / 100.0, rng);
    const std::size_t chi_l = list_chromatic_number(g);
    if (oracle::chromatic_number(g) > chi_l || chi_l > oracle::degeneracy(g) + 1) ++violations;
  }
  const double t = seconds_since(start);
  return {fixed && violations == 0 && t <= 600,
          std::string("K4/C4/K3,3 ") + (fixed ? "match" : "differ") + ", " + std::to_string(violations) +
              " sandwich violations over 300 graphs"};
}

Outcome degeneracy_coloring() {
  std::mt19937_64 rng(1009);
  std::size_t failures = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 8;
    const Graph g = oracle::random_graph(n, static_cast<double>(rng() % 100) / 100.0, rng);
    const std::size_t size = oracle::degeneracy(g) + 1;
    std::vector<std::vector<int>> raw(n);
    for (auto& l : raw) {
      std::vector<int> pool(2 * size + 2);
      std::iota(pool.begin(), pool.end(), 0);
      std::shuffle(pool.begin(), pool.end(), rng);
      l.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    }
    const ListAssignment lists(raw);
    const auto c = color_by_degeneracy(g, lists);
    if (!c || !oracle::valid_coloring(g, lists, *c)) ++failures;
  }
  return {failures == 0, "500 instances, " + std::to_string(failures) + " failures"};
}

Outcome pipelines_end_to_end() {
  const auto start = Clock::now();
  ExperimentConfig conn;
  conn.seed = 2024;
  ExperimentConfig rnd = conn;
  rnd.delta = Rational(1, 10);
  rnd.p = Rational(1, 20);
  rnd.d_override = Rational(2);
  ExperimentConfig iso = conn;
  iso.samples = 300;
  iso.max_sample_order = 8;

  const std::vector<std::pair<std::string, std::function<RunReport()>>> runs = {
      {"conn", [&] { return pipeline_conn(named::complete(6), Rational(3, 10), conn); }},
      {"random", [&] { return pipeline_random(6, Rational(4, 5), rnd); }},
      {"isolated", [&] { return pipeline_isolated(named::complete(3), 3, iso); }},
      {"mader", [&] { return mader_step_check(named::complete(6)); }},
  };
  const auto dir = std::filesystem::temp_directory_path() / ("forge_acceptance_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  bool ok = true;
  std::size_t claims = 0;
  std::ostringstream d;
  for (const auto& [name, run] : runs) {
    const RunReport first = run();
    const RunReport second = run();
    const bool same = first.determinism_hash() == second.determinism_hash();
    const auto run_dir = dir / name;
    {
      DirectoryLock lock(run_dir);
      persist_report(first, run_dir);
    }
    const std::string path = (run_dir / "report.json").string();
    const char* argv[] = {"forge", "replay", "--report", path.c_str()};
    std::ostringstream out, err;
    const bool replayed = cli_main(4, argv, out, err) == 0;
    claims += first.certified.size();
    ok &= same && replayed && !first.certified.empty();
    d << name << " " << hex64(first.determinism_hash()).substr(0, 8) << (same ? "" : " NONDETERMINISTIC")
      << (replayed ? "" : " REPLAY FAILED") << ", ";
  }
  std::filesystem::remove_all(dir);
  const double t = seconds_since(start);
  d << claims << " certified claims replayed";
  return {ok && t <= 900, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"dual minor oracles agree", dual_minor_oracles},
      {"Petersen minor fixtures", petersen_fixtures},
      {"factored pasting verifier matches materialized pasting", pasting_ground_truth},
      {"clique-sum keeps H-minor-freeness", glue_closure},
      {"property Q minimal-pair reduction", property_q_reduction},
      {"Chernoff bound and constants", chernoff_and_constants},
      {"G(n; m) sampler uniformity", sampler_uniformity},
      {"choosability ground truths", choosability_truths},
      {"degeneracy colouring totality", degeneracy_coloring},
      {"pipelines deterministic and replayable", pipelines_end_to_end},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    char took[32];
    std::snprintf(took, sizeof took, "%.2f s", seconds_since(start));
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << o.detail
              << "; " << took << ")" << std::endl;
    failed += !o.pass;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
