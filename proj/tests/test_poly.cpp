#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agpir/poly.hpp"
#include "agpir/rng.hpp"
#include "test_support.hpp"

using namespace agpir;
using namespace agpir::test;

TEST_CASE("divrem: x^3 / (x^2 + 1) over F_13") {
  const Field f = f13();
  const auto [q, r] = poly_divrem(f, Poly::monomial(3), p({1, 0, 1}));
  CHECK(q == Poly::x());
  CHECK(r == p({0, 12}));
}

TEST_CASE("divrem: b / b = (1, 0)") {
  const Field f = f13();
  const Poly b = p({5, 0, 3, 1});
  const auto [q, r] = poly_divrem(f, b, b);
  CHECK(q == Poly::one());
  CHECK(r.is_zero());
}

TEST_CASE("divrem recomposition oracle over 200 random pairs") {
  const Field f = f13();
  Rng rng(11);
  int checked = 0;
  while (checked < 200) {
    const Poly a = random_poly(rng, f, 10);
    const Poly b = random_poly(rng, f, 10);
    if (b.is_zero()) continue;
    const auto [q, r] = poly_divrem(f, a, b);
    CHECK(poly_add(f, poly_mul(f, q, b), r) == a);
    CHECK(r.deg() < b.deg());
    ++checked;
  }
}

TEST_CASE("division by zero polynomial fails") {
  CHECK_THROWS_AS(poly_divrem(f13(), Poly::one(), Poly{}), Error);
}

TEST_CASE("poly_from_roots") {
  const Field f = f13();
  CHECK(poly_from_roots(f, {2, 3}) == p({6, 8, 1}));  // (x-2)(x-3) = x^2 + 8x + 6
  CHECK(poly_from_roots(f, {}) == Poly::one());
  CHECK(poly_from_roots(f, {0}) == Poly::x());
}

TEST_CASE("poly_from_roots vanishes exactly on its roots over F_256") {
  const Field f = f256();
  Rng rng(29);
  std::vector<FieldElem> roots;
  std::vector<bool> is_root(f.q(), false);
  for (int i = 0; i < 4; ++i) {
    const FieldElem r = rng.uniform(f);
    roots.push_back(r);
    is_root[r] = true;
  }
  const Poly h = poly_from_roots(f, roots);
  for (std::uint32_t a = 0; a < f.q(); ++a) {
    CHECK((poly_eval(f, h, a) == 0) == is_root[a]);
  }
}

TEST_CASE("poly_from_roots vanishes exactly on its roots") {
  const Field f = f13();
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<FieldElem> roots;
    std::vector<bool> is_root(f.q(), false);
    const std::size_t count = rng.below(5);
    for (std::size_t i = 0; i < count; ++i) {
      const FieldElem r = rng.uniform(f);
      roots.push_back(r);
      is_root[r] = true;
    }
    const Poly h = poly_from_roots(f, roots);
    CHECK(h.deg() == static_cast<int>(roots.size()));
    CHECK((h.is_zero() || h.leading() == 1));
    for (FieldElem a = 0; a < f.q(); ++a) {
      CHECK((poly_eval(f, h, a) == 0) == is_root[a]);
    }
  }
}

TEST_CASE("evaluation basics") {
  const Field f = f13();
  const Poly h = p({6, 8, 1});
  CHECK(poly_eval(f, h, 2) == 0);
  CHECK(poly_eval(f, Poly::one(), 9) == 1);
  CHECK(poly_eval(f, Poly{}, 5) == 0);
}

TEST_CASE("evaluation is a ring homomorphism on F_256") {
  const Field f = f256();
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly a = random_poly(rng, f, 8);
    const Poly b = random_poly(rng, f, 8);
    const FieldElem x = rng.uniform(f);
    CHECK(poly_eval(f, poly_mul(f, a, b), x) == f.mul(poly_eval(f, a, x), poly_eval(f, b, x)));
    CHECK(poly_eval(f, poly_add(f, a, b), x) == f.add(poly_eval(f, a, x), poly_eval(f, b, x)));
  }
}

TEST_CASE("degree is additive under products") {
  const Field f = f13();
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly a = random_poly(rng, f, 6);
    const Poly b = random_poly(rng, f, 6);
    if (a.is_zero() || b.is_zero()) {
      CHECK(poly_mul(f, a, b).is_zero());
    } else {
      CHECK(poly_mul(f, a, b).deg() == a.deg() + b.deg());
    }
  }
}

TEST_CASE("zero polynomial degree sentinel") {
  CHECK(Poly{}.deg() == Poly::kZeroDegree);
  CHECK(p({0, 0, 0}).is_zero());
}

TEST_CASE("gcd and derivative") {
  const Field f = f13();
  const Poly a = poly_from_roots(f, {1, 2});
  const Poly b = poly_from_roots(f, {2, 5});
  CHECK(poly_gcd(f, a, b) == poly_from_roots(f, {2}));
  CHECK(poly_deriv(f, p({4, 3, 5})) == p({3, 10}));
  // derivative kills p-th powers: d/dx x^13 = 13 x^12 = 0 over F_13
  CHECK(poly_deriv(f, Poly::monomial(13)).is_zero());
}
