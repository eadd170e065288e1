#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agpir/funcspace.hpp"
#include "agpir/matrix.hpp"
#include "test_support.hpp"

using namespace agpir;
using namespace agpir::test;

namespace {

// Pole order at P_inf of (a + b y) / (d y^e), from v(x) = -2, v(y) = -(2g+1).
int pole_at_infinity(const FuncElem& u, int g) {
  int num = Poly::kZeroDegree;
  if (!u.a.is_zero()) num = 2 * u.a.deg();
  if (!u.b.is_zero()) num = std::max(num, 2 * u.b.deg() + 2 * g + 1);
  return num - 2 * u.d.deg() - (2 * g + 1) * u.e;
}

Matrix eval_matrix(const HyperellipticCurve& curve, const std::vector<FuncElem>& fns,
                   const std::vector<CurvePoint>& pts) {
  Matrix m(fns.size(), pts.size());
  for (std::size_t i = 0; i < fns.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) m.at(i, j) = ff_eval(curve, fns[i], pts[j]);
  }
  return m;
}

std::vector<CurvePoint> nonzero_y_points(const HyperellipticCurve& curve) {
  std::vector<CurvePoint> pts;
  for (const CurvePoint& p : curve.enumerate_points()) {
    if (!p.at_infinity && p.y != 0) pts.push_back(p);
  }
  return pts;
}

}  // namespace

TEST_CASE("y * y reduces through the curve relation") {
  const HyperellipticCurve c13 = curve_g2_f13();
  const FuncElem y2 = ff_mul(c13, FuncElem::y_func(), FuncElem::y_func());
  CHECK(y2 == FuncElem::from_poly(c13.F()));  // H = 0 here

  const HyperellipticCurve c256 = curve_288_f256();
  const FuncElem y2b = ff_mul(c256, FuncElem::y_func(), FuncElem::y_func());
  CHECK(y2b.a == c256.F());
  CHECK(y2b.b == poly_neg(c256.field(), c256.H()));
}

TEST_CASE("(1/y) * y = 1 and 1/y * 1/y rationalizes") {
  const HyperellipticCurve c = curve_g2_f13();
  CHECK(ff_mul(c, FuncElem::inv_y(), FuncElem::y_func()) == FuncElem::one());
  const FuncElem inv_y2 = ff_mul(c, FuncElem::inv_y(), FuncElem::inv_y());
  CHECK(inv_y2.e == 0);
  // 1/y^2 = 1/F when H = 0
  CHECK(inv_y2.a == Poly::one());
  CHECK(inv_y2.d == c.F());
}

TEST_CASE("multiplication and addition agree with pointwise evaluation") {
  const HyperellipticCurve c = curve_g2_f13();
  const Field& f = c.field();
  const auto pts = nonzero_y_points(c);
  Rng rng(5);
  std::vector<FuncElem> pool = {
      FuncElem::y_func(), FuncElem::inv_y(), FuncElem::from_poly(p({1, 2, 3})),
      FuncElem{p({4, 1}), p({0, 2}), p({1, 1}), 0}, FuncElem{p({3}), p({1}), p({2, 0, 1}), 1}};
  for (int trial = 0; trial < 40; ++trial) {
    const FuncElem& u = pool[rng.below(pool.size())];
    const FuncElem& v = pool[rng.below(pool.size())];
    int checked = 0;
    for (std::size_t i = 0; i < pts.size() && checked < 5; ++i) {
      const CurvePoint& pt = pts[(i * 7 + trial) % pts.size()];
      const FuncElem prod = ff_mul(c, u, v);
      const FuncElem sum = ff_add(c, u, v);
      if (!ff_evaluable(c, u, pt) || !ff_evaluable(c, v, pt)) continue;
      if (!ff_evaluable(c, prod, pt) || !ff_evaluable(c, sum, pt)) continue;
      CHECK(ff_eval(c, prod, pt) == f.mul(ff_eval(c, u, pt), ff_eval(c, v, pt)));
      CHECK(ff_eval(c, sum, pt) == f.add(ff_eval(c, u, pt), ff_eval(c, v, pt)));
      ++checked;
    }
  }
}

TEST_CASE("evaluation basics and poles") {
  const HyperellipticCurve c = curve_g2_f13();
  CHECK(ff_eval(c, FuncElem::y_func(), CurvePoint::affine(5, 0)) == 0);
  for (const CurvePoint& pt : nonzero_y_points(c)) {
    CHECK(ff_eval(c, FuncElem::from_poly(Poly::x()), pt) == pt.x);
  }
  // 1/y has a pole at the rational zero of y
  CHECK_THROWS_AS(ff_eval(c, FuncElem::inv_y(), CurvePoint::affine(5, 0)), Error);
  CHECK_THROWS_AS(ff_eval(c, FuncElem::one(), CurvePoint::infinity()), Error);
}

TEST_CASE("quotient functions evaluate as quotients") {
  const HyperellipticCurve c = curve_g2_f13();
  const Field& f = c.field();
  // (x - 1)(x - 2) / y
  const Poly num = poly_from_roots(f, {1, 2});
  const FuncElem u{num, Poly{}, Poly{{1}}, 1};
  for (const CurvePoint& pt : nonzero_y_points(c)) {
    CHECK(ff_eval(c, u, pt) == f.div(poly_eval(f, num, pt.x), pt.y));
  }
}

TEST_CASE("Riemann-Roch basis of L(7 P_inf) on the genus-2 curve") {
  const HyperellipticCurve c = curve_g2_f13();
  const RRBasis basis = rr_basis(c, 7);
  REQUIRE(basis.dim == 6);  // {1, x, x^2, x^3, y, xy}
  CHECK(basis.elements[0] == FuncElem::one());
  CHECK(basis.elements[1] == FuncElem::from_poly(Poly::x()));
  CHECK(basis.elements[2] == FuncElem::from_poly(Poly::monomial(2)));
  CHECK(basis.elements[3] == FuncElem::from_poly(Poly::monomial(3)));
  CHECK(basis.elements[4] == FuncElem::y_func());
  CHECK(basis.elements[5] == FuncElem{Poly{}, Poly::x(), Poly{{1}}, 0});
}

TEST_CASE("rr_basis dimension follows Riemann-Roch") {
  const HyperellipticCurve c = curve_g2_f13();
  CHECK(rr_basis(c, 0).dim == 1);
  for (int k : {2, 4, 6, 8}) {
    CHECK(rr_basis(c, k + c.genus() - 1).dim == k);  // l((k+g-1) P_inf) = k
  }
  const HyperellipticCurve e = curve_18_f11();
  for (int m = 1; m <= 9; ++m) CHECK(rr_basis(e, m).dim == m);  // g = 1, m > 2g-2
}

TEST_CASE("genus-0 alignment basis") {
  const Field f = f13();
  const CsaBasis csa = csa_basis_genus0(f, 3, {1, 2, 3});
  CHECK(csa.delta == 1);
  CHECK(csa.h == poly_from_roots(f, {1, 2, 3}));
  CHECK(csa.h_list[1] == FuncElem::from_poly(poly_from_roots(f, {1, 3})));
  CHECK(csa.f_noise[1] == FuncElem::from_poly(p({11, 1})));  // x - 2

  const CsaBasis single = csa_basis_genus0(f, 1, {7});
  CHECK(single.h_list[0] == FuncElem::one());
  CHECK(single.h == p({6, 1}));  // x - 7

  CHECK_THROWS_AS(csa_basis_genus0(f, 2, {4, 4}), Error);
}

TEST_CASE("genus-0 h_l coefficient matrix has rank L for random gamma sets") {
  const Field f = f256();
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int L = 2 + static_cast<int>(rng.below(6));
    std::vector<FieldElem> gammas;
    while (gammas.size() < static_cast<std::size_t>(L)) {
      const FieldElem g = rng.uniform(f);
      if (std::find(gammas.begin(), gammas.end(), g) == gammas.end()) gammas.push_back(g);
    }
    const CsaBasis csa = csa_basis_genus0(f, L, gammas);
    Matrix coefs(L, L);
    for (int l = 0; l < L; ++l) {
      for (int j = 0; j < L; ++j) coefs.at(l, j) = csa.h_list[l].a.coef_at(j);
    }
    CHECK(mat_rank(f, coefs) == static_cast<std::size_t>(L));
  }
}

TEST_CASE("hyperelliptic alignment basis, genus 1, L = 3") {
  const HyperellipticCurve c = curve_288_f256();
  const Field& f = c.field();
  // J = 2; gammas with F(gamma) = gamma^3 != 0
  const CsaBasis csa = csa_basis_hyper(c, 3, {1, 2});
  CHECK(csa.delta == 5);
  CHECK(csa.h.deg() == 2);
  REQUIRE(csa.h_list.size() == 3);
  CHECK(csa.h_list[0] == FuncElem::from_poly(p({2, 1})));  // x - gamma_2 = x + 2
  CHECK(csa.h_list[1] == FuncElem::from_poly(p({1, 1})));
  CHECK(csa.h_list[2] == FuncElem::y_func());  // type 2 with empty product
  // h / h_1^(2) = (x - gamma_1)(x - gamma_2) / y
  CHECK(csa.f_noise[2] == FuncElem{poly_from_roots(f, {1, 2}), Poly{}, Poly{{1}}, 1});
}

TEST_CASE("hyperelliptic alignment basis, genus 2, L = 2 has no type-2 part") {
  const HyperellipticCurve c = curve_g2_f13();
  const CsaBasis csa = csa_basis_hyper(c, 2, {0, 1});
  REQUIRE(csa.h_list.size() == 2);
  for (const FuncElem& h : csa.h_list) {
    CHECK(h.b.is_zero());
    CHECK(h.a.deg() == 1);
  }
  CHECK(csa.delta == 2 * 2 + 3);
}

TEST_CASE("alignment basis preconditions") {
  const HyperellipticCurve c = curve_g2_f13();
  CHECK_THROWS_AS(csa_basis_hyper(c, 3, {0, 1}), Error);      // parity violation
  CHECK_THROWS_AS(csa_basis_hyper(c, 2, {0}), Error);         // wrong J
  CHECK_THROWS_AS(csa_basis_hyper(c, 2, {0, 5}), Error);      // F(5) = 0
  CHECK_THROWS_AS(csa_basis_hyper(c, 2, {1, 1}), Error);      // duplicates
}

TEST_CASE("h_list lies in the span of the L((L+g-1) P_inf) basis") {
  const HyperellipticCurve c = curve_18_f11();
  const CsaBasis csa = csa_basis_hyper(c, 3, {1, 2});
  const auto pts = nonzero_y_points(c);
  const Matrix rr = eval_matrix(c, rr_basis(c, 3 + c.genus() - 1).elements, pts);
  const Matrix hs = eval_matrix(c, csa.h_list, pts);
  CHECK(row_space_contains_all(c.field(), rr, hs));
  CHECK(mat_rank(c.field(), hs) == 3);  // and they are independent
}

TEST_CASE("noise basis sizes") {
  const Field f = f13();
  const CsaBasis g0 = csa_basis_genus0(f, 3, {1, 2, 3});
  CHECK(noise_basis_genus0(f, 2, 2, g0).size() == 4);  // X + T

  const HyperellipticCurve c = curve_g2_f13();
  const CsaBasis csa = csa_basis_hyper(c, 2, {0, 1});
  CHECK(noise_basis(c, 1, 1, csa).size() == 14);  // X + T + 5g + 2
}

TEST_CASE("pole accounting: delta = 2g + 3 via max pole of h/h_l plus (y)_0") {
  const HyperellipticCurve c = curve_18_f11();  // g = 1, pick L = 3 so type 2 exists
  const CsaBasis csa = csa_basis_hyper(c, 3, {1, 2});
  const int g = c.genus();
  int max_pinf = 0;
  bool has_y_pole = false;
  for (const FuncElem& fn : csa.f_noise) {
    max_pinf = std::max(max_pinf, pole_at_infinity(fn, g));
    if (fn.e == 1) has_y_pole = true;
  }
  CHECK(max_pinf == 2);
  CHECK(has_y_pole);
  CHECK(csa.delta == 2 + (2 * g + 1));  // 2 P_inf plus deg (y)_0
}

TEST_CASE("noise space equals the valuation-filtered span (row-space oracle)") {
  // Independent route: enumerate monomial candidates x^i y^j / y^e and keep
  // those whose pole divisor fits (X+T+4g) P_inf + (y)_0 by direct valuation
  // arithmetic; their h-multiples must span exactly the constructed noise
  // space at the usable points.
  const HyperellipticCurve c = curve_18_f11();
  const Field& f = c.field();
  const int g = c.genus();
  const int X = 1, T = 1;
  const CsaBasis csa = csa_basis_hyper(c, 3, {1, 2});
  const std::vector<FuncElem> noise = noise_basis(c, X, T, csa);

  const int m = X + T + 4 * g;
  std::vector<FuncElem> route_b;
  const FuncElem h_poly = FuncElem::from_poly(csa.h);
  for (int e = 0; e <= 1; ++e) {
    for (int j = 0; j <= 1; ++j) {
      for (int i = 0; 2 * i <= m + (2 * g + 1) * (1 + e - j); ++i) {
        const int pole_inf = 2 * i + (2 * g + 1) * j - (2 * g + 1) * e;
        if (pole_inf > m) continue;
        FuncElem w{j == 0 ? Poly::monomial(i) : Poly{}, j == 1 ? Poly::monomial(i) : Poly{},
                   Poly{{1}}, e};
        route_b.push_back(ff_mul(c, h_poly, ff_normalize(f, w)));
      }
    }
  }

  std::vector<CurvePoint> pts;
  for (const CurvePoint& p : c.enumerate_points()) {
    if (p.at_infinity || p.y == 0) continue;
    if (poly_eval(f, csa.h, p.x) == 0) continue;
    pts.push_back(p);
  }
  const Matrix constructed = eval_matrix(c, noise, pts);
  const Matrix filtered = eval_matrix(c, route_b, pts);
  CHECK(row_space_equal(f, constructed, filtered));
  CHECK(mat_rank(f, constructed) == noise.size());
  CHECK(noise.size() == static_cast<std::size_t>(X + T + 5 * g + 2));
}

TEST_CASE("normalization rules") {
  const Field f = f13();
  // (b y) / y collapses to b
  CHECK(ff_normalize(f, FuncElem{Poly{}, p({3, 1}), Poly{{1}}, 1}) ==
        FuncElem::from_poly(p({3, 1})));
  // common content cancels and the denominator becomes monic
  const FuncElem u = ff_normalize(f, FuncElem{poly_scale(f, p({1, 1}), 2), Poly{},
                                              poly_scale(f, p({2, 1}), 2), 0});
  CHECK(u.d == p({2, 1}));
  CHECK(u.a == p({1, 1}));
  CHECK_THROWS_AS(ff_normalize(f, FuncElem{Poly::one(), Poly{}, Poly{}, 0}), Error);
}
