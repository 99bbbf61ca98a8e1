#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "oracles/oracles.hpp"

using namespace skein;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMatrix m(static_cast<long>(rows.size()), rows.size() ? static_cast<long>(rows.begin()->size()) : 0);
  long i = 0;
  for (const auto& r : rows) {
    long j = 0;
    for (long long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

mpz_class det(const IntMatrix& a) {
  const mpz_class c0 = characteristic_polynomial(a).front();
  return a.rows() % 2 ? mpz_class(-c0) : c0;
}

PlumbingForest single(long framing) {
  PlumbingForest f;
  f.add_vertex("a", framing);
  return f;
}

}  // namespace

TEST_CASE("linking matrices") {
  CHECK(linking_matrix(chain({3, -2})) == mat({{3, 1}, {1, -2}}));
  CHECK(linking_matrix(single(5)) == mat({{5}}));
  CHECK(linking_matrix(PlumbingForest{}).size() == 0);
}

TEST_CASE("signature") {
  CHECK(signature(mat({{1}})) == 1);
  CHECK(signature(mat({{0}})) == 0);
  CHECK(signature(mat({{2, 1}, {1, 2}})) == 2);
  CHECK(signature(linking_matrix(e8_sphere())) == -8);
  CHECK(signature(linking_matrix(mirror(e8_sphere()))) == 8);
  CHECK(signature(mat({{0, 1}, {1, 0}})) == 0);
  CHECK(signature(IntMatrix(0, 0)) == 0);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int t = 0; t < 40; ++t) {
    const long n = 1 + t % 5;
    IntMatrix a(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = i; j < n; ++j) a(i, j) = a(j, i) = entry(rng);
    std::vector<long> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMatrix b(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) b(i, j) = a(perm[i], perm[j]);
    CHECK(signature(a) == signature(b));
    CHECK(signature(IntMatrix(-a)) == -signature(a));
  }
}

TEST_CASE("characteristic polynomial") {
  // det(tI - [[2,1],[1,2]]) = t^2 - 4t + 3
  const auto c = characteristic_polynomial(mat({{2, 1}, {1, 2}}));
  REQUIRE(c.size() == 3);
  CHECK(c[0] == 3);
  CHECK(c[1] == -4);
  CHECK(c[2] == 1);
}

TEST_CASE("smith normal form") {
  const IntMatrix a = mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const SmithForm s = smith_normal_form(a);
  CHECK(s.U * a * s.V == s.D);
  CHECK(std::abs(s.D(0, 0)) == 2);
  CHECK(std::abs(s.D(1, 1)) == 6);
  CHECK(std::abs(s.D(2, 2)) == 12);
  CHECK(abs(det(s.U)) == 1);
  CHECK(abs(det(s.V)) == 1);
}

TEST_CASE("congruence solver against brute force") {
  CHECK(solve_congruences(mat({{0}}), {0}, 2).solutions == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(solve_congruences(mat({{1}}), {1}, 2).solutions == std::vector<std::vector<int>>{{1}});
  CHECK(oracle::brute_solve(mat({{0}}), {0}, 2) == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(oracle::brute_solve(mat({{1}}), {1}, 2) == std::vector<std::vector<int>>{{1}});
  CHECK_THROWS_AS(oracle::brute_solve(IntMatrix::Zero(9, 9), std::vector<long long>(9, 0), 2), Error);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int t = 0; t < 300; ++t) {
    const long n = 1 + t % 4;
    const int d = t % 3 == 0 ? 3 : (t % 2 ? 2 : 4);
    IntMatrix a(n, n);
    std::vector<long long> b(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < n; ++j) a(i, j) = entry(rng);
      b[static_cast<std::size_t>(i)] = entry(rng);
    }
    const auto sol = solve_congruences(a, b, d);
    CHECK(sol.solutions == oracle::brute_solve(a, b, d));
    for (const auto& g : sol.generators) {
      IntVector x(n);
      for (long i = 0; i < n; ++i) x(i) = g[static_cast<std::size_t>(i)];
      IntVector r = a * x;
      for (long i = 0; i < n; ++i) CHECK(r(i) % d == 0);
    }
  }
}

TEST_CASE("structures") {
  auto vals = [](const std::vector<Structure>& s) {
    std::vector<std::vector<int>> out;
    for (const auto& x : s) out.push_back(x.values);
    return out;
  };
  CHECK(vals(structures(single(0), 2, StructureKind::spin_d)) == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(vals(structures(single(1), 2, StructureKind::spin_d)) == std::vector<std::vector<int>>{{1}});
  CHECK(vals(structures(e8_sphere(), 2, StructureKind::spin_d)) ==
        std::vector<std::vector<int>>{std::vector<int>(8, 0)});
  CHECK(structures(s1_x_s2(), 4, StructureKind::cohomology).size() == 4);
  CHECK(structures(lens_space(6, 1), 2, StructureKind::cohomology).size() == 2);
  CHECK(structures(lens_space(6, 1), 3, StructureKind::cohomology).size() == 3);
  CHECK_THROWS_AS(structures(single(1), 3, StructureKind::spin_d), Error);
  CHECK(is_structure(single(1), 2, StructureKind::spin_d, {1}));
  CHECK_FALSE(is_structure(single(1), 2, StructureKind::spin_d, {0}));
}

TEST_CASE("standard manifolds") {
  CHECK(lens_space(2, 1) == chain({-2}));
  CHECK(lens_space(5, 2) == chain({-3, -2}));
  CHECK(mirror(chain({-2})) == chain({2}));
  CHECK_THROWS_AS(lens_space(4, 2), Error);
  CHECK_THROWS_AS(lens_space(3, 5), Error);
  const auto e8 = e8_sphere();
  CHECK(e8.size() == 8);
  CHECK(e8.edges().size() == 7);
  CHECK(det(linking_matrix(e8)) == 1);
  const auto u = disjoint_union(chain({1, 2}), chain({3}));
  CHECK(u.size() == 3);
  CHECK(u.contains("v1'"));
  CHECK(s1_x_s2().size() == 1);
  CHECK(s1_x_s2().framing(0) == 0);
}

TEST_CASE("blow down") {
  const auto a = blow_down(chain({3, 1}), "v2");
  CHECK(a.size() == 1);
  CHECK(a.framing(0) == 2);
  CHECK(blow_down(single(1), "a").empty());
  const auto b = blow_down(chain({-2, -1, -2}), "v2");
  REQUIRE(b.size() == 2);
  CHECK(b.framing(0) == -1);
  CHECK(b.framing(1) == -1);
  CHECK(b.edges().size() == 1);
  CHECK_THROWS_AS(blow_down(chain({3, 2}), "v2"), Error);
  PlumbingForest star;
  star.add_vertex("c", 1);
  for (auto id : {"x", "y", "z"}) {
    star.add_vertex(id, 2);
    star.add_edge("c", id);
  }
  CHECK_THROWS_AS(blow_down(star, "c"), Error);
  // signature drops by the framing
  const auto f = chain({2, 1, -3});
  CHECK(signature(linking_matrix(blow_down(f, "v2"))) == signature(linking_matrix(f)) - 1);
}

TEST_CASE("forest validation and json") {
  PlumbingForest f;
  f.add_vertex("a", 1);
  f.add_vertex("b", 2);
  f.add_vertex("c", 3);
  f.add_edge("a", "b");
  f.add_edge("b", "c");
  CHECK_THROWS_AS(f.add_edge("a", "c"), Error);
  CHECK_THROWS_AS(f.add_edge("a", "a"), Error);
  CHECK_THROWS_AS(f.add_edge("a", "q"), Error);
  CHECK_THROWS_AS(f.add_vertex("a", 0), Error);
  CHECK(PlumbingForest::from_json(f.to_json()) == f);
  CHECK(PlumbingForest::from_json(R"({"vertices":[],"edges":[]})").empty());
  CHECK_THROWS_AS(PlumbingForest::from_json(R"({"vertices":[{"id":"a","framing":1.5}],"edges":[]})"), Error);
  CHECK_THROWS_AS(PlumbingForest::from_json(R"({"vertices":[{"id":"a","framing":1},{"id":"a","framing":2}],"edges":[]})"),
                  Error);
  CHECK_THROWS_AS(PlumbingForest::from_json("not json"), Error);
  CHECK_THROWS_AS(PlumbingForest::from_json(
                      R"({"vertices":[{"id":"a","framing":1},{"id":"b","framing":1}],"edges":[["a","b"],["b","a"]]})"),
                  Error);
  const auto bp = chain({1, 2, 3, 4}).bipartition();
  CHECK(bp == std::vector<int>{0, 1, 0, 1});
}
