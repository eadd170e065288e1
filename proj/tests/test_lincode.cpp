#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agpir/lincode.hpp"
#include "test_support.hpp"

using namespace agpir;
using namespace agpir::test;

namespace {

std::vector<Poly> monomials(std::size_t k) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(Poly::monomial(i));
  return out;
}

std::vector<FieldElem> range_points(std::size_t n, FieldElem start = 0) {
  std::vector<FieldElem> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = start + static_cast<FieldElem>(i);
  return out;
}

std::vector<Poly> scaled_monomials(const Field& f, const Poly& front, std::size_t k) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(poly_mul(f, front, Poly::monomial(i)));
  return out;
}

// The Chen-Cramer noise code from the genus-2 curve over F_13:
// ev(y L(7 P_inf)) at the 24 canonical points, a [24, 6] code.
LinearCode cc_noise_code(const HyperellipticCurve& curve) {
  std::vector<FuncElem> fns;
  for (const FuncElem& u : rr_basis(curve, 7).elements) {
    fns.push_back(ff_mul(curve, FuncElem::y_func(), u));
  }
  std::vector<CurvePoint> pts;
  for (const CurvePoint& p : curve.enumerate_points()) {
    if (!p.at_infinity && p.y != 0) pts.push_back(p);
  }
  return code_from_functions(curve, fns, pts);
}

// Second, independent subset-rank route for the sigma oracle: recursive
// subset walk plus column elimination pivoting on the last nonzero row.
std::uint64_t sigma_brute(const Field& f, const LinearCode& code, std::size_t u) {
  std::vector<std::size_t> subset;
  std::uint64_t insecure = 0;
  auto rank_last_pivot = [&](const std::vector<std::size_t>& cols) {
    std::vector<std::vector<FieldElem>> m;
    for (const std::size_t c : cols) {
      std::vector<FieldElem> col(code.k);
      for (std::size_t r = 0; r < code.k; ++r) col[r] = code.gen.at(r, c);
      m.push_back(col);
    }
    std::size_t rank = 0;
    std::vector<bool> used(code.k, false);
    for (auto& col : m) {
      std::size_t pivot = code.k;
      for (std::size_t r = code.k; r-- > 0;) {
        if (!used[r] && col[r] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot == code.k) continue;
      used[pivot] = true;
      ++rank;
      for (auto& other : m) {
        if (&other == &col || other[pivot] == 0) continue;
        const FieldElem factor = f.div(other[pivot], col[pivot]);
        for (std::size_t r = 0; r < code.k; ++r) {
          other[r] = f.sub(other[r], f.mul(factor, col[r]));
        }
      }
    }
    return rank;
  };
  auto walk = [&](auto&& self, std::size_t next) -> void {
    if (subset.size() == u) {
      if (rank_last_pivot(subset) < u) ++insecure;
      return;
    }
    for (std::size_t c = next; c + (u - subset.size()) <= code.n; ++c) {
      subset.push_back(c);
      self(self, c + 1);
      subset.pop_back();
    }
  };
  walk(walk, 0);
  return insecure;
}

}  // namespace

TEST_CASE("repetition code from the constant function") {
  const HyperellipticCurve c = curve_g2_f13();
  std::vector<CurvePoint> pts;
  for (const CurvePoint& p : c.enumerate_points()) {
    if (!p.at_infinity) pts.push_back(p);
  }
  const LinearCode rep = code_from_functions(c, {FuncElem::one()}, pts);
  CHECK(rep.k == 1);
  CHECK(min_distance(c.field(), rep) == static_cast<int>(rep.n));
  CHECK(dual_distance(c.field(), rep) == 2);  // any two equal columns are dependent
}

TEST_CASE("monomial evaluations equal the Vandermonde construction") {
  const Field f = f13();
  const auto alphas = range_points(9);
  const LinearCode code = code_from_polys(f, monomials(4), alphas);
  Matrix vandermonde(4, 9);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 9; ++j) vandermonde.at(i, j) = f.pow(alphas[j], i);
  }
  CHECK(code.gen == vandermonde);
  CHECK(row_space_equal(f, code.gen, vandermonde));
}

TEST_CASE("GRS codes are MDS: [10, 4] over F_13 has d = 7") {
  const Field f = f13();
  const LinearCode code = code_from_polys(f, monomials(4), range_points(10));
  CHECK(min_distance(f, code) == 7);  // n - k + 1
  CHECK(min_distance(f, code, 4) == 7);  // partitioned run agrees
  CHECK(dual_distance(f, code) == 5);    // k + 1
}

TEST_CASE("pole at an evaluation point is an error") {
  const HyperellipticCurve c = curve_g2_f13();
  std::vector<CurvePoint> pts = {CurvePoint::affine(5, 0)};
  CHECK_THROWS_AS(code_from_functions(c, {FuncElem::inv_y()}, pts), Error);
}

TEST_CASE("rank-deficient function lists are rejected with the rank found") {
  const Field f = f13();
  const std::vector<Poly> fns = {Poly::one(), Poly::one()};
  CHECK_THROWS_WITH_AS(code_from_polys(f, fns, range_points(5)),
                       doctest::Contains("rank 1"), Error);
}

TEST_CASE("the genus-2 noise code has parameters [24, 6] with d_perp = 5") {
  const HyperellipticCurve c = curve_g2_f13();
  const LinearCode code = cc_noise_code(c);
  CHECK(code.n == 24);
  CHECK(code.k == 6);
  CHECK(dual_distance(c.field(), code) == 5);
}

TEST_CASE("star product identity for GRS codes") {
  const Field f = f13();
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 6 + rng.below(7);  // 6..12
    const std::size_t k = 1 + rng.below(4);
    const std::size_t l = 1 + rng.below(4);
    const Poly front1 = poly_from_roots(f, {static_cast<FieldElem>(12)});  // x - 12
    const Poly front2 = Poly::constant(3);
    const auto alphas = range_points(n);
    const LinearCode c1 = code_from_polys(f, scaled_monomials(f, front1, k), alphas);
    const LinearCode c2 = code_from_polys(f, scaled_monomials(f, front2, l), alphas);
    const LinearCode prod = star_product(f, c1, c2);
    const std::size_t expected_k = std::min(k + l - 1, n);
    const LinearCode grs = code_from_polys(
        f, scaled_monomials(f, poly_mul(f, front1, front2), expected_k), alphas);
    CHECK(prod.k == expected_k);
    CHECK(row_space_equal(f, prod.gen, grs.gen));
  }
}

TEST_CASE("Rep(n) is the identity of the star algebra") {
  const Field f = f13();
  const auto alphas = range_points(8);
  const LinearCode rep = code_from_polys(f, {Poly::one()}, alphas);
  const LinearCode code = code_from_polys(f, monomials(3), alphas);
  const LinearCode prod = star_product(f, rep, code);
  CHECK(row_space_equal(f, prod.gen, code.gen));
}

TEST_CASE("AG star products respect divisor addition") {
  const HyperellipticCurve c = curve_g2_f13();
  std::vector<CurvePoint> pts;
  for (const CurvePoint& p : c.enumerate_points()) {
    if (!p.at_infinity) pts.push_back(p);
  }
  for (const auto& [m1, m2] : std::vector<std::pair<int, int>>{{4, 5}, {5, 6}, {6, 7}}) {
    const LinearCode a = code_from_functions(c, rr_basis(c, m1).elements, pts);
    const LinearCode b = code_from_functions(c, rr_basis(c, m2).elements, pts);
    const LinearCode sum = code_from_functions(c, rr_basis(c, m1 + m2).elements, pts);
    const LinearCode prod = star_product(c.field(), a, b);
    CHECK(row_space_contains_all(c.field(), sum.gen, prod.gen));
  }
}

TEST_CASE("star product requires matching point lists") {
  const Field f = f13();
  const LinearCode a = code_from_polys(f, monomials(2), range_points(6));
  const LinearCode b = code_from_polys(f, monomials(2), range_points(6, 1));
  CHECK_THROWS_AS(star_product(f, a, b), Error);
}

TEST_CASE("information sets") {
  const Field f = f13();
  Matrix eye(3, 5);
  for (std::size_t i = 0; i < 3; ++i) eye.at(i, i) = 1;
  CHECK(information_set(f, eye, 3) == std::vector<std::size_t>{0, 1, 2});

  // MDS: every k columns are independent, so greedy picks the first k
  const LinearCode grs = code_from_polys(f, monomials(4), range_points(10));
  CHECK(information_set(f, grs, 4) == std::vector<std::size_t>{0, 1, 2, 3});

  Matrix bad(2, 3);
  bad.at(0, 0) = 1;
  bad.at(1, 0) = 2;
  CHECK_THROWS_AS(information_set(f, bad, 2), Error);
}

TEST_CASE("Singleton and AG bounds hold for computed codes") {
  const Field f = f13();
  const LinearCode grs = code_from_polys(f, monomials(4), range_points(10));
  CHECK(min_distance(f, grs) <= static_cast<int>(grs.n - grs.k + 1));

  const HyperellipticCurve c = curve_g2_f13();
  std::vector<CurvePoint> pts;
  for (const CurvePoint& p : c.enumerate_points()) {
    if (!p.at_infinity) pts.push_back(p);
  }
  const LinearCode ag = code_from_functions(c, rr_basis(c, 6).elements, pts);
  const int d = min_distance(f, ag);
  CHECK(d <= static_cast<int>(ag.n - ag.k + 1));
  CHECK(d >= static_cast<int>(ag.n - ag.k + 1) - c.genus());
  const int dd = dual_distance(f, ag);
  CHECK(dd <= static_cast<int>(ag.k) + 1);
  CHECK(dd >= static_cast<int>(ag.k) + 1 - c.genus());
}

TEST_CASE("dual code cross-checks the column-dependence search") {
  const Field f = f13();
  const LinearCode code = code_from_polys(f, monomials(3), range_points(7));
  const LinearCode dual = dual_code(f, code);
  CHECK(dual.k == code.n - code.k);
  // orthogonality
  for (std::size_t i = 0; i < code.k; ++i) {
    for (std::size_t j = 0; j < dual.k; ++j) {
      FieldElem acc = 0;
      for (std::size_t t = 0; t < code.n; ++t) {
        acc = f.add(acc, f.mul(code.gen.at(i, t), dual.gen.at(j, t)));
      }
      CHECK(acc == 0);
    }
  }
  CHECK(min_distance(f, dual) == dual_distance(f, code));
  CHECK(min_distance(f, code) == dual_distance(f, dual));
}

TEST_CASE("sigma profile on an MDS noise code") {
  const Field f = f13();
  const LinearCode grs = code_from_polys(f, monomials(4), range_points(10));
  const SigmaPoint at_k = sigma_profile(f, grs, grs.k);
  CHECK(at_k.insecure == 0);  // every k-subset has full rank
  const SigmaPoint below = sigma_profile(f, grs, dual_distance(f, grs) - 1);
  CHECK(below.insecure == 0);  // sigma vanishes at d_perp - 1
  const SigmaPoint beyond = sigma_profile(f, grs, grs.k + 2);
  CHECK(beyond.insecure == beyond.total);  // rank <= k < U everywhere
}

TEST_CASE("sigma agrees with an independent brute-force implementation") {
  const Field f = f13();
  Matrix gen(2, 6);
  const FieldElem rows[2][6] = {{1, 2, 0, 3, 1, 0}, {0, 4, 0, 1, 2, 5}};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 6; ++j) gen.at(i, j) = rows[i][j];
  }
  const LinearCode code = code_from_rows(f, gen, std::vector<EvalPoint>(6));
  for (std::size_t u = 1; u <= 2; ++u) {
    const SigmaPoint sp = sigma_profile(f, code, u);
    CHECK(sp.insecure == sigma_brute(f, code, u));
    CHECK(sp.total == binomial(6, u));
    const SigmaPoint sp_mt = sigma_profile(f, code, u, 3);
    CHECK(sp_mt.insecure == sp.insecure);
  }
}

TEST_CASE("binomial values used by the sigma regressions") {
  CHECK(binomial(24, 5) == 42504);
  CHECK(binomial(24, 6) == 134596);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(5, 9) == 0);
}

TEST_CASE("guards are hard errors") {
  const Field f = f13();
  const LinearCode big = code_from_polys(f, monomials(9), range_points(12));
  CHECK_THROWS_AS(min_distance(f, big), GuardError);  // 13^9 > 2^26
  Matrix wide(1, 60);
  for (std::size_t j = 0; j < 60; ++j) wide.at(0, j) = 1;
  const LinearCode wide_code = code_from_rows(f, wide, std::vector<EvalPoint>(60));
  CHECK_THROWS_AS(sigma_profile(f, wide_code, 30), GuardError);  // C(60,30) overflows guard
}
