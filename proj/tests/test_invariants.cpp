#include <doctest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace skein;
using test_support::category;
using test_support::q;

namespace {

PlumbingForest single(long framing) {
  PlumbingForest f;
  f.add_vertex("a", framing);
  return f;
}

PlumbingForest random_forest(std::mt19937& rng, int max_vertices) {
  std::uniform_int_distribution<int> size(1, max_vertices), framing(-3, 3);
  PlumbingForest f;
  const int n = size(rng);
  for (int v = 0; v < n; ++v) {
    f.add_vertex("u" + std::to_string(v), framing(rng));
    if (v > 0 && rng() % 4 != 0) f.add_edge(static_cast<std::size_t>(rng() % v), static_cast<std::size_t>(v));
  }
  return f;
}

}  // namespace

TEST_CASE("sphere and S1xS2") {
  for (auto [N, K, m] : {std::tuple{2, 2, Mode::spin}, std::tuple{4, 4, Mode::spin}, std::tuple{2, 4, Mode::coh}}) {
    const auto& c = category(N, K, m);
    CHECK(tau(c, PlumbingForest{}) == q(c, 1));
    CHECK(tau(c, single(1)) == q(c, 1));
    CHECK(tau(c, single(-1)) == q(c, 1));
    CHECK(tau(c, chain({2, 1})) == q(c, 1));
    CHECK(tau(c, s1_x_s2()) == ExactValue::eta(c.field(), -1));
  }
}

TEST_CASE("refined values") {
  for (auto [N, K, m] : {std::tuple{2, 2, Mode::spin}, std::tuple{2, 6, Mode::spin}, std::tuple{2, 4, Mode::coh}}) {
    const auto& c = category(N, K, m);
    const int d = c.params().d;
    const StructureKind kind = structure_kind(m);
    ExactValue expect = ExactValue::eta(c.field(), -1);
    expect.scale(mpq_class(1, d));
    const auto ss = structures(s1_x_s2(), d, kind);
    CHECK(ss.size() == static_cast<std::size_t>(d));
    for (const auto& s : ss) CHECK(tau_refined(c, s1_x_s2(), s) == expect);
    if (m == Mode::spin) {
      const auto one = structures(single(1), d, kind);
      REQUIRE(one.size() == 1);
      CHECK(one[0].values[0] == d / 2);
      CHECK(tau_refined(c, single(1), one[0]) == q(c, 1));
    }
    CHECK_THROWS_AS(tau_refined(c, s1_x_s2(), Structure{kind, {0, 0}}), Error);
  }
  const auto& c = category(2, 2);
  CHECK_THROWS_AS(tau_refined(c, single(1), Structure{StructureKind::spin_d, {0}}), Error);
}

TEST_CASE("omega colored Hopf links") {
  const auto& c = category(2, 2);
  const int d = c.params().d;
  for (int eps : {0, 1, -1})
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const PlumbingForest f = chain({eps, 0});
        const ExactValue v = evaluate_forest(c, f, omega_assignment(c, f, std::vector<int>{i, j}));
        const bool one = (eps == 0 && i == 0 && j == 0) || (eps != 0 && i == 0 && j == d / 2);
        CHECK(v == (one ? q(c, 1) : q(c, 0)));
      }
  ExactValue expect = ExactValue::eta(c.field(), -1);
  expect.scale(mpq_class(1, d));
  CHECK(evaluate_forest(c, single(0), omega_assignment(c, single(0), std::vector<int>{1})) == expect);
}

TEST_CASE("tree contraction agrees with brute force") {
  std::mt19937 rng(3);
  for (auto [N, K, m] : {std::tuple{2, 2, Mode::spin}, std::tuple{2, 4, Mode::coh}, std::tuple{2, 6, Mode::spin}}) {
    const auto& c = category(N, K, m);
    for (int t = 0; t < 8; ++t) {
      const PlumbingForest f = random_forest(rng, 5);
      const auto a = omega_assignment(c, f);
      CHECK(evaluate_forest(c, f, a) == oracle::brute_evaluate(c, f, a));
      std::vector<int> g(f.size());
      for (auto& x : g) x = static_cast<int>(rng() % static_cast<unsigned>(c.params().d));
      const auto ag = omega_assignment(c, f, g);
      CHECK(evaluate_forest(c, f, ag) == oracle::brute_evaluate(c, f, ag));
    }
  }
  const auto& c44 = category(4, 4);
  const auto e8 = e8_sphere();
  PlumbingForest small = chain({1, -2, 3});
  CHECK(evaluate_forest(c44, small, omega_assignment(c44, small)) ==
        oracle::brute_evaluate(c44, small, omega_assignment(c44, small)));
}

TEST_CASE("lens spaces and refinement sums") {
  for (auto [N, K, m] : {std::tuple{2, 2, Mode::spin}, std::tuple{2, 4, Mode::coh}}) {
    const auto& c = category(N, K, m);
    const int d = c.params().d;
    for (long p = 2; p <= 7; ++p)
      for (long qq = 1; qq < p; ++qq) {
        if (std::gcd(p, qq) != 1) continue;
        const auto f = lens_space(p, qq);
        ExactValue sum(c.field());
        for (const auto& s : structures(f, d, structure_kind(m))) sum += tau_refined(c, f, s);
        CHECK(sum == tau(c, f));
      }
  }
}

TEST_CASE("multiplicativity and blow-down invariance") {
  std::mt19937 rng(5);
  const auto& c = category(2, 2);
  for (int t = 0; t < 5; ++t) {
    const auto a = random_forest(rng, 3), b = random_forest(rng, 3);
    CHECK(tau(c, disjoint_union(a, b)) == tau(c, a) * tau(c, b));
  }
  const auto f = chain({2, -1, -4, -2});
  CHECK(tau(c, f) == tau(c, blow_down(f, "v2")));
  const auto g = chain({-2, -1, -2});
  CHECK(tau(c, g) == tau(c, blow_down(g, "v2")));
  // L(2,1) is not the sphere
  CHECK_FALSE(tau(c, chain({3, 1})) == q(c, 1));
  CHECK(tau(c, chain({3, 1})) == tau(c, single(2)));
}

TEST_CASE("mirror and conjugation") {
  const auto& c = category(2, 2);
  const auto f = lens_space(5, 2);
  const auto t = tau(c, f), tm = tau(c, mirror(f));
  CHECK(tau(c, disjoint_union(f, mirror(f))) == t * tm);
  CHECK(tv(c, f) == t * tm);
}

TEST_CASE("turaev viro values") {
  for (auto [N, K, m] : {std::tuple{2, 2, Mode::spin}, std::tuple{2, 4, Mode::coh}}) {
    const auto& c = category(N, K, m);
    const int d = c.params().d;
    const auto s3 = refined_table(c, PlumbingForest{});
    CHECK(s3.tv == q(c, 1));
    REQUIRE(s3.entries.size() == 1);
    CHECK(s3.entries[0].value == q(c, 1));

    const auto t = refined_table(c, s1_x_s2());
    CHECK(t.tv == ExactValue::eta(c.field(), -2));
    CHECK(t.entries.size() == static_cast<std::size_t>(d * d));
    ExactValue each = ExactValue::eta(c.field(), -2);
    each.scale(mpq_class(1, d * d));
    for (const auto& e : t.entries) CHECK(e.value == each);
    CHECK(t.transfer);
    CHECK(t.decomposition);
    CHECK(t.product_symmetry);
    CHECK(t.orientation_symmetry);

    const auto e8 = refined_table(c, e8_sphere());
    CHECK(e8.transfer);
    CHECK(e8.decomposition);
    CHECK(e8.product_symmetry);
  }
}

TEST_CASE("structure transport to the mirror") {
  const int d = 4;
  const auto f = lens_space(8, 3);
  for (const auto& s : structures(f, d, StructureKind::spin_d)) {
    const auto t = transport_to_mirror(f, s, d);
    CHECK(is_structure(mirror(f), d, StructureKind::spin_d, t.values));
  }
  for (const auto& s : structures(f, d, StructureKind::cohomology)) {
    const auto t = transport_to_mirror(f, s, d);
    CHECK(is_structure(mirror(f), d, StructureKind::cohomology, t.values));
  }
}
