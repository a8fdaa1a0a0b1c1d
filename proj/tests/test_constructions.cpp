#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "forge/coloring.hpp"
#include "forge/constructions.hpp"
#include "forge/errors.hpp"
#include "forge/minors.hpp"
#include "forge/named_graphs.hpp"
#include "forge/random.hpp"
#include "oracles.hpp"

using namespace forge;

namespace {

VertexSet set_of(std::size_t n, std::initializer_list<int> members) { return VertexSet(n, members); }

Graph copy_of(const PastingSpec& spec, const Graph& big, std::size_t copy) {
  Graph out(spec.f.order());
  for (int u = 0; u < static_cast<int>(spec.f.order()); ++u)
    for (int v = u + 1; v < static_cast<int>(spec.f.order()); ++v)
      if (big.has_edge(pasting_vertex(spec, copy, u), pasting_vertex(spec, copy, v))) out.add_edge(u, v);
  return out;
}

/// Shape of the connectivity gadget, checked without library helpers.
void check_conn_shape(const Graph& h, const Gadget& g, std::size_t a_size, std::size_t b_size, const Rational& eps) {
  const auto a = g.part.a.members();
  const auto b = g.part.b.members();
  CHECK(a.size() == a_size);
  CHECK(b.size() == b_size);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) CHECK(g.f.has_edge(a[i], a[j]));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) CHECK(g.f.has_edge(b[i], b[j]));
  for (const int v : b) {
    std::size_t missing = 0;
    for (int u = 0; u < static_cast<int>(g.f.order()); ++u)
      if (u != v && !g.f.has_edge(u, v)) ++missing;
    CHECK(Rational(missing) <= eps * h.order());
  }
  CHECK_FALSE(contains_minor(g.f, h));
  if (g.f.order() <= 9) CHECK_FALSE(contains_minor_contraction_oracle(g.f, h));
}

}  // namespace

TEST_CASE("k_fold_pasting basics") {
  const Graph triangle = named::complete(3);
  CHECK(k_fold_pasting({triangle, set_of(3, {1}), 1}) == triangle);

  const PastingSpec bowtie_spec{triangle, set_of(3, {0}), 2};
  const Graph bowtie = k_fold_pasting(bowtie_spec);
  CHECK(bowtie.order() == 5);
  CHECK(bowtie.size() == 6);
  CHECK(oracle::isomorphic(bowtie, Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}})));
  CHECK(pasting_order(bowtie_spec) == 5);

  CHECK_THROWS_AS(k_fold_pasting({named::complete(10), set_of(10, {0}), 500}), GuardError);
  CHECK(pasting_order({named::complete(10), set_of(10, {0}), 1'000'000'000'000ULL}) ==
        BigInt(1) + BigInt(9) * BigInt(1'000'000'000'000ULL));
  CHECK_THROWS_AS(k_fold_pasting({triangle, set_of(4, {0}), 2}), PreconditionError);
}

TEST_CASE("k_fold_pasting invariants on random specs") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Graph f = oracle::random_graph(n, 0.6, rng);
    VertexSet s(n);
    for (int v = 0; v < static_cast<int>(n); ++v)
      if (rng() % 2) s.set(v);
    const PastingSpec spec{f, s, 1 + rng() % 4};
    const Graph big = k_fold_pasting(spec);
    CHECK(big.order() == s.count() + spec.copies * (n - s.count()));

    for (std::size_t c = 0; c < spec.copies; ++c) {
      CHECK(copy_of(spec, big, c) == f);
      CHECK(oracle::isomorphic(induced_subgraph(big, [&] {
                                 VertexSet image(big.order());
                                 for (int v = 0; v < static_cast<int>(n); ++v) image.set(pasting_vertex(spec, c, v));
                                 return image;
                               }()),
                               f));
    }
    // copies meet exactly in S, and S keeps its clique status
    VertexSet shared(big.order());
    s.for_each([&](int v) { shared.set(pasting_vertex(spec, 0, v)); });
    CHECK(is_clique(big, shared) == is_clique(f, s));
    for (std::size_t c1 = 0; c1 < spec.copies; ++c1)
      for (std::size_t c2 = c1 + 1; c2 < spec.copies; ++c2)
        for (int u = 0; u < static_cast<int>(n); ++u)
          for (int v = 0; v < static_cast<int>(n); ++v) {
            const int x = pasting_vertex(spec, c1, u);
            const int y = pasting_vertex(spec, c2, v);
            if (s.test(u) || s.test(v)) continue;
            CHECK(x != y);
            CHECK_FALSE(big.has_edge(x, y));
          }
  }
}

TEST_CASE("adversarial lists") {
  // d = 0: B is complete to A
  const auto full = fixtures::two_clique_fixture(2, 2, 0b1111);
  const auto lists = adversarial_lists_for_copy(full.f, full.part, {1, 3});
  for (std::size_t v = 0; v < 4; ++v) CHECK(lists[v] == std::vector<int>{1, 2, 3});

  // |A| = 1, b not adjacent to a
  const auto single = fixtures::two_clique_fixture(1, 3, 0b011);
  const auto l1 = adversarial_lists_for_copy(single.f, single.part, {3});
  CHECK(l1[0] == std::vector<int>{1, 2, 3});
  CHECK(l1[1] == std::vector<int>{1, 2, 3});
  CHECK(l1[3] == std::vector<int>{1, 2});

  // |A| = |B| = 2, d = 1
  const auto slack = fixtures::two_clique_fixture(2, 2, 0b0110);
  REQUIRE(slack.part.d == 1);
  const auto l2 = adversarial_lists_for_copy(slack.f, slack.part, {2, 1});
  for (std::size_t v = 0; v < 4; ++v) CHECK(l2[v].size() >= 2);

  CHECK_THROWS_AS(adversarial_lists_for_copy(slack.f, slack.part, {0, 1}), PreconditionError);
  CHECK_THROWS_AS(adversarial_lists_for_copy(slack.f, slack.part, {4, 1}), PreconditionError);
  CHECK_THROWS_AS(adversarial_lists_for_copy(slack.f, slack.part, {1}), PreconditionError);

  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t a = rng() % 4;
    const std::size_t b = 1 + rng() % 4;
    const auto fx = fixtures::two_clique_fixture(a, b, rng());
    const std::size_t universe = a + b - 1;
    std::vector<int> colors(a);
    for (auto& c : colors) c = 1 + static_cast<int>(rng() % universe);
    const auto l = adversarial_lists_for_copy(fx.f, fx.part, colors);
    for (std::size_t v = 0; v < a + b; ++v) CHECK(l[v].size() + fx.part.d >= universe);
  }
}

TEST_CASE("verify_pasting_lower_bound examples") {
  const auto tri = fixtures::two_clique_fixture(1, 2, 0b11);
  const auto r = verify_pasting_lower_bound(tri.f, tri.part);
  CHECK(r.certified);
  CHECK(r.bound == 3);
  CHECK(r.copies == 2);
  CHECK(r.colorings_checked == 2);
  const Graph bowtie = k_fold_pasting({tri.f, tri.part.a, 2});
  CHECK_FALSE(decide_choosability(bowtie, 2).choosable);
  CHECK(list_chromatic_number(bowtie) == 3);

  const auto slack = fixtures::two_clique_fixture(2, 2, 0b0110);
  const auto r2 = verify_pasting_lower_bound(slack.f, slack.part);
  CHECK(r2.certified);
  CHECK(r2.bound == 3);
  CHECK(r2.copies == 9);
  CHECK(r2.colorings_checked == 6);

  // a looser d weakens the bound but keeps the certificate
  auto loose = slack.part;
  loose.d = 2;
  CHECK(verify_pasting_lower_bound(slack.f, loose).bound == 2);

  // |A| = 1, B anticomplete to A, d = |A|: the pigeonhole step still applies
  const auto anti = fixtures::two_clique_fixture(1, 2, 0);
  CHECK(verify_pasting_lower_bound(anti.f, anti.part).certified);

  // invariant violations
  auto tight = slack.part;
  tight.d = 0;
  CHECK_THROWS_AS(verify_pasting_lower_bound(slack.f, tight), PreconditionError);
  Graph broken = slack.f;
  broken.remove_edge(2, 3);
  CHECK_THROWS_AS(verify_pasting_lower_bound(broken, slack.part), PreconditionError);
}

TEST_CASE("counterexample search finds extensions when B is not a clique") {
  // B independent and anticomplete to A: every B-vertex keeps |B| - 1 >= 1 colours
  Graph f(3);
  const VertexSet a = set_of(3, {0});
  const VertexSet b = set_of(3, {1, 2});
  std::uint64_t checked = 0;
  const auto cx = find_pasting_counterexample(f, a, b, &checked);
  REQUIRE(cx);
  CHECK(checked == 1);
  CHECK(cx->a_colors == std::vector<int>{1});
  CHECK(cx->extension == Coloring{1, 2, 2});
  CHECK(oracle::pasting_ground_truth_colorable(f, {0}, {1, 2}));
}

TEST_CASE("factored verifier matches the materialised pasting") {
  const auto all = fixtures::small_pasting_fixtures(24);
  CHECK(all.size() > 50);
  for (const auto& fx : all) {
    const auto r = verify_pasting_lower_bound(fx.f, fx.part);
    const bool colorable = oracle::pasting_ground_truth_colorable(fx.f, fx.part.a.members(), fx.part.b.members());
    CHECK(r.certified == !colorable);
  }
}

TEST_CASE("connectivity gadget") {
  const Rational eps(3, 10);
  const auto out = build_thm_conn_gadget(named::complete(6), eps, 7, 50);
  CHECK(out.a_size == 2);
  CHECK(out.b_size == 2);
  CHECK(out.connectivity == 5);
  CHECK(out.nominal_d == 1);
  CHECK_FALSE(out.low_connectivity);
  REQUIRE(out.gadget);
  check_conn_shape(named::complete(6), *out.gadget, 2, 2, eps);
  validate_partition(out.gadget->f, out.gadget->part);
  CHECK(out.attempts.back().minor_free == std::optional<bool>(true));
  // same seed, same outcome
  const auto again = build_thm_conn_gadget(named::complete(6), eps, 7, 50);
  REQUIRE(again.gadget);
  CHECK(again.gadget->f == out.gadget->f);
  CHECK(again.attempts.size() == out.attempts.size());

  CHECK_THROWS_AS(build_thm_conn_gadget(named::complete(6), Rational(1, 2), 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_thm_conn_gadget(named::complete(6), Rational(0), 1, 5), std::invalid_argument);
  CHECK(build_thm_conn_gadget(named::path(6), Rational(1, 4), 1, 5).low_connectivity);

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph h = oracle::random_graph(5 + rng() % 4, 0.7, rng);
    const Rational e(1 + static_cast<int>(rng() % 4), 10);
    const auto o = build_thm_conn_gadget(h, e, rng(), 20);
    for (const auto& rec : o.attempts) CHECK(rec.degree_ok == (Rational(rec.max_degree) <= e * h.order()));
    if (o.gadget) check_conn_shape(h, *o.gadget, o.a_size, o.b_size, e);
  }
}

TEST_CASE("random-graph gadget") {
  CHECK(random_gadget_part_size(Rational(1, 5), 5) == 2);
  CHECK(random_gadget_part_size(Rational(1, 10), 6) == 4);
  CHECK_THROWS_AS(random_gadget_part_size(Rational(1, 3), 6), std::invalid_argument);
  CHECK_THROWS_AS(build_thm_random_gadget(named::complete(6), Rational(1, 7), std::nullopt, 1, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_thm_random_gadget(named::complete(6), Rational(1, 10), Rational(2), 1, 3),
                  std::invalid_argument);

  // p = 0: the complement is complete, so every attempt finds the minor
  const auto zero = build_thm_random_gadget(named::cycle(6), Rational(1, 10), Rational(0), 3, 4);
  CHECK_FALSE(zero.gadget);
  REQUIRE(zero.attempts.size() == 4);
  for (const auto& rec : zero.attempts) {
    CHECK(rec.max_degree == 0);
    CHECK(rec.minor_free == std::optional<bool>(false));
  }
  CHECK(zero.nominal_d == 0);
  CHECK(zero.p == 0);

  // default p = δ/2; at this size every accepted-degree sample still has an
  // H[U] minor, which a direct rebuild confirms
  std::mt19937_64 rng(54);
  const Graph h = oracle::random_graph(9, 0.9, rng);
  const auto out = build_thm_random_gadget(h, Rational(1, 8), std::nullopt, 11, 10);
  CHECK(out.p == Rational(1, 16));
  CHECK(out.a_size == 5);
  CHECK(out.nominal_d == 1);
  CHECK(out.attempts.size() == 10);
  CHECK_FALSE(out.gadget);
  for (const auto& rec : out.attempts) {
    const auto g = sample_bipartite(5, 5, Rational(1, 16), rec.seed);
    CHECK(rec.max_degree == g.max_degree());
    CHECK(rec.degree_ok == (g.max_degree() <= 1));
    if (!rec.degree_ok) continue;
    const Graph f = bipartite_union_complement(g, VertexSet::full(5), VertexSet::full(5));
    bool found = false;
    for (const auto& u : subsets_of_size(9, 8)) found = found || contains_minor(f, induced_subgraph(h, u)).has_value();
    CHECK(found);
  }
}

TEST_CASE("subsets_of_size") {
  const auto s = subsets_of_size(4, 2);
  REQUIRE(s.size() == 6);
  CHECK(s.front().members() == std::vector<int>{0, 1});
  CHECK(s[1].members() == std::vector<int>{0, 2});
  CHECK(s.back().members() == std::vector<int>{2, 3});
  CHECK(subsets_of_size(3, 0).size() == 1);
  CHECK(subsets_of_size(3, 4).empty());
}
