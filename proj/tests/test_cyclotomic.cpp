#include "doctest.h"

#include <random>

#include "skein/cyclotomic.hpp"

using namespace skein;

TEST_CASE("roots of unity reduce correctly") {
  auto f = make_field(16);
  CHECK(ExactValue::root_of_unity(f, 16) == ExactValue::rational(f, 1));
  CHECK(ExactValue::root_of_unity(f, 8) == ExactValue::rational(f, -1));
  CHECK_FALSE(ExactValue::root_of_unity(f, 4) == ExactValue::rational(f, 1));
  CHECK(make_field(8)->degree() == 4);
  CHECK(make_field(24)->degree() == 8);
  CHECK(make_field(1)->degree() == 1);
}

TEST_CASE("inverse and conjugation") {
  auto f = make_field(16);
  auto z = ExactValue::root_of_unity(f, 1);
  CHECK(z.inverse() == ExactValue::root_of_unity(f, 15));
  CHECK(ExactValue::rational(f, mpq_class(3, 7)).conj() == ExactValue::rational(f, mpq_class(3, 7)));
  auto s = ExactValue::root_of_unity(f, 2);
  auto t = s + s.inverse();
  CHECK(t.inverse() == t * ExactValue::rational(f, mpq_class(1, 2)));
  CHECK_THROWS_AS(ExactValue(f).inverse(), Error);
}

TEST_CASE("quantum integers") {
  auto f = make_field(16);
  CHECK(quantum_integer(f, 0, 2).is_zero());
  CHECK(quantum_integer(f, 1, 2) == ExactValue::rational(f, 1));
  CHECK(quantum_integer(f, 3, 2) == ExactValue::rational(f, 1));
  auto g = make_field(24);
  auto s = ExactValue::root_of_unity(g, 3);
  for (int n = -10; n <= 10; ++n) {
    CHECK(quantum_integer(g, n, 3) * (s - s.inverse()) == s.pow(n) - s.pow(-n));
    CHECK(quantum_integer(g, -n, 3) == -quantum_integer(g, n, 3));
  }
}

TEST_CASE("field axioms on random elements") {
  auto f = make_field(24);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-5, 5);
  auto random_value = [&] {
    std::vector<mpq_class> c(static_cast<std::size_t>(f->degree()));
    for (auto& x : c) x = mpq_class(dist(rng), 1 + (dist(rng) + 5) % 3);
    return ExactValue::from_coefficients(f, c);
  };
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_value(), b = random_value(), c = random_value();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    if (!a.is_zero()) CHECK(a * a.inverse() == ExactValue::rational(f, 1));
  }
}

TEST_CASE("eta parity") {
  auto f = make_field(16);
  f->set_eta({4, 0, 0, 0, 0, 0, 0, 0}, {0.5, 0.0});
  auto eta = ExactValue::eta(f);
  CHECK(eta * eta == ExactValue::rational(f, mpq_class(1, 4)));
  CHECK(eta.pow(-2) == ExactValue::rational(f, 4));
  CHECK_THROWS_AS((void)(eta + ExactValue::rational(f, 1)), Error);
  CHECK(eta + ExactValue(f) == eta);
  CHECK(eta.inverse() == eta * ExactValue::rational(f, 4));
}
