#include "agpir/funcspace.hpp"

#include <algorithm>
#include <set>

namespace agpir {

FuncElem ff_normalize(const Field& f, FuncElem u) {
  if (u.d.is_zero()) throw Error("funcspace: zero denominator");
  if (u.e < 0 || u.e > 1) throw Error("funcspace: exponent e out of range");
  if (u.is_zero()) return FuncElem::zero();
  if (u.e == 1 && u.a.is_zero()) {
    // (b y) / (d y) = b / d
    u.a = std::move(u.b);
    u.b = Poly{};
    u.e = 0;
  }
  Poly g = poly_gcd(f, poly_gcd(f, u.a, u.b), u.d);
  if (g.deg() > 0) {
    u.a = poly_divrem(f, u.a, g).first;
    u.b = poly_divrem(f, u.b, g).first;
    u.d = poly_divrem(f, u.d, g).first;
  }
  const FieldElem lead = u.d.leading();
  if (lead != 1) {
    const FieldElem inv = f.inv(lead);
    u.a = poly_scale(f, u.a, inv);
    u.b = poly_scale(f, u.b, inv);
    u.d = poly_monic(f, u.d);
  }
  return u;
}

FuncElem ff_mul(const HyperellipticCurve& curve, const FuncElem& u, const FuncElem& v) {
  const Field& f = curve.field();
  const Poly& F = curve.F();
  const Poly& H = curve.H();
  // (a1 + b1 y)(a2 + b2 y) with y^2 = F - H y.
  Poly A = poly_add(f, poly_mul(f, u.a, v.a), poly_mul(f, poly_mul(f, u.b, v.b), F));
  Poly B = poly_sub(f, poly_add(f, poly_mul(f, u.a, v.b), poly_mul(f, u.b, v.a)),
                    poly_mul(f, poly_mul(f, u.b, v.b), H));
  Poly d = poly_mul(f, u.d, v.d);
  int e = u.e + v.e;
  if (e == 2) {
    // 1/y^2 = (F + H y + H^2) / F^2 on the curve.
    const Poly fh2 = poly_add(f, F, poly_mul(f, H, H));
    Poly A2 = poly_add(f, poly_mul(f, A, fh2), poly_mul(f, poly_mul(f, B, H), F));
    Poly B2 = poly_add(f, poly_mul(f, A, H), poly_mul(f, B, F));
    A = std::move(A2);
    B = std::move(B2);
    d = poly_mul(f, d, poly_mul(f, F, F));
    e = 0;
  }
  return ff_normalize(f, FuncElem{std::move(A), std::move(B), std::move(d), e});
}

namespace {

// Numerator pair (a, b) multiplied by y: (a + b y) y = bF + (a - bH) y.
std::pair<Poly, Poly> times_y(const Field& f, const Poly& F, const Poly& H, const Poly& a,
                              const Poly& b) {
  return {poly_mul(f, b, F), poly_sub(f, a, poly_mul(f, b, H))};
}

}  // namespace

FuncElem ff_add(const HyperellipticCurve& curve, const FuncElem& u, const FuncElem& v) {
  const Field& f = curve.field();
  const int e = std::max(u.e, v.e);
  Poly a1 = poly_mul(f, u.a, v.d);
  Poly b1 = poly_mul(f, u.b, v.d);
  if (e - u.e == 1) std::tie(a1, b1) = times_y(f, curve.F(), curve.H(), a1, b1);
  Poly a2 = poly_mul(f, v.a, u.d);
  Poly b2 = poly_mul(f, v.b, u.d);
  if (e - v.e == 1) std::tie(a2, b2) = times_y(f, curve.F(), curve.H(), a2, b2);
  return ff_normalize(f, FuncElem{poly_add(f, a1, a2), poly_add(f, b1, b2),
                                  poly_mul(f, u.d, v.d), e});
}

FuncElem ff_scale(const Field& f, const FuncElem& u, FieldElem s) {
  if (s == 0) return FuncElem::zero();
  return FuncElem{poly_scale(f, u.a, s), poly_scale(f, u.b, s), u.d, u.e};
}

bool ff_evaluable(const HyperellipticCurve& curve, const FuncElem& u, const CurvePoint& p) {
  if (p.at_infinity) return false;
  if (poly_eval(curve.field(), u.d, p.x) == 0) return false;
  if (u.e == 1 && p.y == 0) return false;
  return true;
}

FieldElem ff_eval(const HyperellipticCurve& curve, const FuncElem& u, const CurvePoint& p) {
  const Field& f = curve.field();
  if (p.at_infinity) throw Error("funcspace: evaluation at the point at infinity");
  FieldElem den = poly_eval(f, u.d, p.x);
  if (den == 0) throw Error("funcspace: pole at evaluation point (denominator vanishes)");
  if (u.e == 1) {
    if (p.y == 0) throw Error("funcspace: pole at evaluation point (zero of y)");
    den = f.mul(den, p.y);
  }
  const FieldElem num = f.add(poly_eval(f, u.a, p.x), f.mul(poly_eval(f, u.b, p.x), p.y));
  return f.div(num, den);
}

FieldElem ff_eval_line(const Field& f, const FuncElem& u, FieldElem alpha) {
  if (!u.b.is_zero() || u.e != 0) {
    throw Error("funcspace: genus-0 evaluation of an element involving y");
  }
  const FieldElem den = poly_eval(f, u.d, alpha);
  if (den == 0) throw Error("funcspace: pole at evaluation point (denominator vanishes)");
  return f.div(poly_eval(f, u.a, alpha), den);
}

RRBasis rr_basis(const HyperellipticCurve& curve, int m) {
  if (m < 0) throw Error("funcspace: rr_basis needs m >= 0");
  const int g = curve.genus();
  RRBasis basis;
  basis.m = m;
  for (int j = 0; j <= 1; ++j) {
    for (int i = 0; 2 * i + (2 * g + 1) * j <= m; ++i) {
      Poly mono = Poly::monomial(static_cast<std::size_t>(i));
      if (j == 0) {
        basis.elements.push_back(FuncElem::from_poly(std::move(mono)));
      } else {
        basis.elements.push_back(FuncElem{Poly{}, std::move(mono), Poly{{1}}, 0});
      }
    }
  }
  basis.dim = static_cast<int>(basis.elements.size());
  return basis;
}

std::vector<FuncElem> div_y_basis(const HyperellipticCurve& curve, int m) {
  std::vector<FuncElem> out;
  for (const FuncElem& u : rr_basis(curve, m).elements) {
    if (u.b.is_zero()) {
      out.push_back(FuncElem{u.a, Poly{}, Poly{{1}}, 1});  // x^i / y
    } else {
      out.push_back(FuncElem::from_poly(u.b));  // x^i y / y = x^i
    }
  }
  return out;
}

namespace {

void check_distinct(const std::vector<FieldElem>& gammas) {
  std::set<FieldElem> s(gammas.begin(), gammas.end());
  if (s.size() != gammas.size()) throw Error("funcspace: gamma values must be distinct");
}

}  // namespace

CsaBasis csa_basis_genus0(const Field& f, int L, const std::vector<FieldElem>& gammas) {
  if (L < 1) throw Error("funcspace: L must be positive");
  if (gammas.size() != static_cast<std::size_t>(L)) {
    throw Error("funcspace: genus-0 basis needs exactly L gamma values");
  }
  check_distinct(gammas);
  CsaBasis csa;
  csa.gammas = gammas;
  csa.delta = 1;
  csa.h = poly_from_roots(f, gammas);
  for (int l = 0; l < L; ++l) {
    std::vector<FieldElem> others;
    for (int j = 0; j < L; ++j) {
      if (j != l) others.push_back(gammas[j]);
    }
    csa.h_list.push_back(FuncElem::from_poly(poly_from_roots(f, others)));
    csa.f_noise.push_back(FuncElem::from_poly(Poly{{f.neg(gammas[l]), 1}}));
  }
  return csa;
}

CsaBasis csa_basis_hyper(const HyperellipticCurve& curve, int L,
                         const std::vector<FieldElem>& gammas) {
  const Field& f = curve.field();
  const int g = curve.genus();
  if (L < g) throw Error("funcspace: L must be at least the genus");
  if ((L - g) % 2 != 0) throw Error("funcspace: L and g must have the same parity");
  const int J = (L + g) / 2;
  if (gammas.size() != static_cast<std::size_t>(J)) {
    throw Error("funcspace: expected J = (L+g)/2 = " + std::to_string(J) + " gamma values, got " +
                std::to_string(gammas.size()));
  }
  check_distinct(gammas);
  for (const FieldElem gamma : gammas) {
    if (poly_eval(f, curve.F(), gamma) == 0) {
      throw Error("funcspace: F(gamma) = 0 at gamma = " + std::to_string(gamma));
    }
  }

  CsaBasis csa;
  csa.gammas = gammas;
  csa.delta = 2 * g + 3;
  csa.h = poly_from_roots(f, gammas);

  // Type 1: h_j = prod_{j' != j} (x - gamma_j'), j in [J].
  for (int j = 0; j < J; ++j) {
    std::vector<FieldElem> others;
    for (int i = 0; i < J; ++i) {
      if (i != j) others.push_back(gammas[i]);
    }
    csa.h_list.push_back(FuncElem::from_poly(poly_from_roots(f, others)));
    csa.f_noise.push_back(FuncElem::from_poly(Poly{{f.neg(gammas[j]), 1}}));
  }
  // Type 2: h_j = y prod_{j' in [J-g], j' != j} (x - gamma_j'), j in [J-g].
  const int type2 = J - g;
  std::vector<FieldElem> tail(gammas.begin() + type2, gammas.end());
  for (int j = 0; j < type2; ++j) {
    std::vector<FieldElem> others;
    for (int i = 0; i < type2; ++i) {
      if (i != j) others.push_back(gammas[i]);
    }
    csa.h_list.push_back(FuncElem{Poly{}, poly_from_roots(f, others), Poly{{1}}, 0});
    // h / h_j = (x - gamma_j) (x - gamma_{J-g+1}) ... (x - gamma_J) / y
    std::vector<FieldElem> roots = tail;
    roots.insert(roots.begin(), gammas[j]);
    csa.f_noise.push_back(FuncElem{poly_from_roots(f, roots), Poly{}, Poly{{1}}, 1});
  }
  return csa;
}

std::vector<FuncElem> noise_basis(const HyperellipticCurve& curve, int X, int T,
                                  const CsaBasis& csa) {
  if (X < 0 || T < 0) throw Error("funcspace: X and T must be nonnegative");
  const Field& f = curve.field();
  const int g = curve.genus();
  std::vector<FuncElem> out;
  for (const FuncElem& w : div_y_basis(curve, X + T + 6 * g + 1)) {
    out.push_back(FuncElem{poly_mul(f, csa.h, w.a), Poly{}, Poly{{1}}, w.e});
  }
  return out;
}

std::vector<FuncElem> noise_basis_genus0(const Field& f, int X, int T, const CsaBasis& csa) {
  if (X < 0 || T < 0) throw Error("funcspace: X and T must be nonnegative");
  std::vector<FuncElem> out;
  for (int i = 0; i < X + T; ++i) {
    out.push_back(FuncElem::from_poly(poly_mul(f, csa.h, Poly::monomial(i))));
  }
  return out;
}

}  // namespace agpir
