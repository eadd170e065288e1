#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "agpir/curve.hpp"
#include "test_support.hpp"

using namespace agpir;
using namespace agpir::test;

TEST_CASE("genus-2 curve over F_13 validates") {
  const CurveValidation v = HyperellipticCurve::validate(f13(), 2, p({1, 2, 4, 0, 1, 1}), Poly{});
  CHECK(v.valid);
  CHECK(v.genus == 2);
  CHECK(v.warnings.empty());
}

TEST_CASE("y^2 = x^3 over F_11 is rejected (F not squarefree)") {
  const CurveValidation v = HyperellipticCurve::validate(f11(), 1, Poly::monomial(3), Poly{});
  CHECK_FALSE(v.valid);
  CHECK_THROWS_AS(HyperellipticCurve(f11(), 1, Poly::monomial(3), Poly{}), Error);
}

TEST_CASE("the 288-point curve over F_256 validates at genus 1") {
  const HyperellipticCurve c = curve_288_f256();
  CHECK(c.genus() == 1);
  CHECK(c.warnings().empty());
}

TEST_CASE("structural rejections") {
  const Field f = f13();
  // degree mismatch
  CHECK_FALSE(HyperellipticCurve::validate(f, 1, p({1, 1, 0, 0, 1}), Poly{}).valid);
  // not monic
  CHECK_FALSE(HyperellipticCurve::validate(f, 1, p({3, 1, 0, 2}), Poly{}).valid);
  // H nonzero in odd characteristic
  CHECK_FALSE(HyperellipticCurve::validate(f, 1, p({3, 1, 0, 1}), Poly::one()).valid);
  // H zero in characteristic 2
  CHECK_FALSE(HyperellipticCurve::validate(f256(), 1, p({0, 0, 0, 1}), Poly{}).valid);
}

TEST_CASE("characteristic-2 singular curves are caught") {
  // y^2 + xy = x^3 + x + 1 over F_2 is singular at (0, 1):
  // H(0) = 0, H'(0) = 1 and F'(0)^2 = F(0) H'(0)^2.
  const Field f2 = Field(FieldSpec{2, 1, {}});
  const CurveValidation v = HyperellipticCurve::validate(f2, 1, p({1, 1, 0, 1}), p({0, 1}));
  CHECK_FALSE(v.valid);
  // moving the constant term away from F'(0)^2 makes it smooth
  CHECK(HyperellipticCurve::validate(f2, 1, p({0, 1, 0, 1}), p({0, 1})).valid);
}

TEST_CASE("deg(H) = g+1 is flagged but accepted") {
  // y^2 + (x^2 + x) y = x^3 + 1 over F_2, genus 1
  const Field f2 = Field(FieldSpec{2, 1, {}});
  const CurveValidation v = HyperellipticCurve::validate(f2, 1, p({1, 0, 0, 1}), p({0, 1, 1}));
  CHECK(v.valid);
  REQUIRE(v.warnings.size() == 1);
  const HyperellipticCurve c(f2, 1, p({1, 0, 0, 1}), p({0, 1, 1}));
  CHECK(c.warnings().size() == 1);
}

TEST_CASE("point counts match the named examples") {
  CHECK(curve_18_f11().count_points() == 18);
  CHECK(curve_17_f11().count_points() == 17);
  CHECK(curve_g2_f13().count_points() == 26);
  CHECK(curve_288_f256().count_points() == 288);
}

TEST_CASE("enumerated points satisfy the curve equation and canonical order") {
  const HyperellipticCurve c = curve_g2_f13();
  const auto pts = c.enumerate_points();
  REQUIRE(pts.size() == 26);
  CHECK(pts[0].at_infinity);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    CHECK_FALSE(pts[i].at_infinity);
    CHECK(c.contains(pts[i]));
    if (i > 1) {
      const bool ordered = pts[i - 1].x < pts[i].x ||
                           (pts[i - 1].x == pts[i].x && pts[i - 1].y < pts[i].y);
      CHECK(ordered);
    }
  }
}

TEST_CASE("points are closed under the involution and fibers pair up") {
  for (const HyperellipticCurve& c : {curve_18_f11(), curve_17_f11()}) {
    const auto pts = c.enumerate_points();
    std::set<std::pair<FieldElem, FieldElem>> affine;
    for (const CurvePoint& p : pts) {
      if (!p.at_infinity) affine.insert({p.x, p.y});
    }
    for (const CurvePoint& p : pts) {
      const CurvePoint q = c.involution(p);
      CHECK(c.involution(q) == p);  // iota is an involution
      if (!p.at_infinity) {
        CHECK(q.x == p.x);
        CHECK(affine.count({q.x, q.y}) == 1);
      } else {
        CHECK(q.at_infinity);
      }
    }
    // fibers of the x-projection have size at most 2
    for (FieldElem x = 0; x < c.field().q(); ++x) CHECK(c.fiber_ys(x).size() <= 2);
  }
}

TEST_CASE("involution examples") {
  const HyperellipticCurve c = curve_g2_f13();
  CHECK(c.involution(CurvePoint::affine(5, 0)) == CurvePoint::affine(5, 0));
  CHECK(c.involution(CurvePoint::infinity()) == CurvePoint::infinity());
  CHECK_THROWS_AS(c.involution(CurvePoint::affine(5, 1)), Error);
}

TEST_CASE("rational zeros of y") {
  const auto z13 = curve_g2_f13().y_zeros();
  REQUIRE(z13.rational.size() == 1);
  CHECK(z13.rational[0] == CurvePoint::affine(5, 0));
  CHECK(z13.divisor_degree == 5);

  CHECK(curve_17_f11().y_zeros().rational.empty());
  CHECK(curve_18_f11().y_zeros().rational.size() == 1);
  CHECK(curve_288_f256().y_zeros().rational.size() == 1);
}

TEST_CASE("exhaustive search over F_11 finds the Hasse-Weil-maximal curve") {
  const auto curves = curve_search(f11(), 1, 18, 2000, SearchMode::exhaustive, 0);
  REQUIRE_FALSE(curves.empty());
  CHECK(curves.front().count_points() == 18);
  // 18 = floor(11 + 1 + 2 sqrt(11)) is the Hasse-Weil maximum here
  CHECK(curves.front().hasse_weil_bound() == 18);
  for (const auto& c : curves) CHECK(c.count_points() >= 18);
}

TEST_CASE("every curve found by exhaustive search respects the point bounds") {
  const auto curves = curve_search(f11(), 1, 0, 2000, SearchMode::exhaustive, 0);
  CHECK(curves.size() > 100);
  for (const auto& c : curves) {
    CHECK(c.count_points() <= c.hasse_weil_bound());
    CHECK(c.count_points() <= 2 * 11 + 1);
  }
  // sorted by point count descending
  for (std::size_t i = 1; i < curves.size(); ++i) {
    CHECK(curves[i - 1].count_points() >= curves[i].count_points());
  }
}

TEST_CASE("asking for more than 2q+1 points yields an empty result") {
  const Field f5_ = f5();
  const auto curves = curve_search(f5_, 1, 2 * 5 + 2, 200, SearchMode::exhaustive, 0);
  CHECK(curves.empty());
}

TEST_CASE("exhaustive search beyond the budget is a guard error") {
  CHECK_THROWS_AS(curve_search(f11(), 1, 0, 100, SearchMode::exhaustive, 0), GuardError);
}

TEST_CASE("random search is deterministic under a fixed seed") {
  const auto a = curve_search(f11(), 1, 16, 500, SearchMode::random, 42);
  const auto b = curve_search(f11(), 1, 16, 500, SearchMode::random, 42);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].F() == b[i].F());
    CHECK(a[i].H() == b[i].H());
  }
  CHECK_FALSE(a.empty());
}

TEST_CASE("genus-2 exhaustive search over F_13 reaches 26 points") {
  const auto curves = curve_search(f13(), 2, 26, 400000, SearchMode::exhaustive, 0);
  REQUIRE_FALSE(curves.empty());
  CHECK(curves.front().count_points() >= 26);
}
