#pragma once

#include <vector>

#include "agpir/curve.hpp"
#include "agpir/field.hpp"
#include "agpir/poly.hpp"

namespace agpir {

// Function-field element (a(x) + b(x)y) / (d(x) y^e) with e in {0, 1}.
// Genus-0 usage keeps b = 0, e = 0, d = 1 (plain polynomials).
// Products reduce y^2 through the curve relation y^2 = F - Hy; a product
// that would need e = 2 is rationalized through (F - Hy)(F + Hy + H^2) = F^2.
struct FuncElem {
  Poly a, b, d{{1}};
  int e = 0;

  static FuncElem from_poly(Poly p) { return FuncElem{std::move(p), Poly{}, Poly{{1}}, 0}; }
  static FuncElem zero() { return from_poly(Poly{}); }
  static FuncElem one() { return from_poly(Poly::one()); }
  static FuncElem y_func() { return FuncElem{Poly{}, Poly::one(), Poly{{1}}, 0}; }
  static FuncElem inv_y() { return FuncElem{Poly::one(), Poly{}, Poly{{1}}, 1}; }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_poly() const { return b.is_zero() && e == 0 && d.is_one(); }

  friend bool operator==(const FuncElem&, const FuncElem&) = default;
};

// Canonical form: gcd(gcd(a, b), d) cancelled, d monic, (b y)/(d y) collapsed.
FuncElem ff_normalize(const Field& f, FuncElem u);

FuncElem ff_mul(const HyperellipticCurve& curve, const FuncElem& u, const FuncElem& v);
FuncElem ff_add(const HyperellipticCurve& curve, const FuncElem& u, const FuncElem& v);
FuncElem ff_scale(const Field& f, const FuncElem& u, FieldElem s);

// Evaluation at an affine point; throws on a pole (d(x(P)) = 0, or e = 1 with
// y(P) = 0), which signals an invalid evaluation-point choice upstream.
FieldElem ff_eval(const HyperellipticCurve& curve, const FuncElem& u, const CurvePoint& p);
bool ff_evaluable(const HyperellipticCurve& curve, const FuncElem& u, const CurvePoint& p);

// Genus-0 evaluation of a rational function a/d at a field point.
FieldElem ff_eval_line(const Field& f, const FuncElem& u, FieldElem alpha);

// Monomial basis {x^i y^j : 2i + (2g+1)j <= m, 0 <= j <= 1} of L(m P_inf),
// ordered j-then-i. dim = m - g + 1 whenever m > 2g - 2.
struct RRBasis {
  int m = 0;
  int dim = 0;
  std::vector<FuncElem> elements;
};
RRBasis rr_basis(const HyperellipticCurve& curve, int m);

// Basis {u / y : u in L(m P_inf)} of L((m - 2g - 1) P_inf + (y)_0).
std::vector<FuncElem> div_y_basis(const HyperellipticCurve& curve, int m);

// Cross-subspace-alignment basis: h_1..h_L span the information space, h is
// the alignment polynomial, and f_noise_l = h / h_l carries the storage
// noise. delta is the extra pole budget (1 for genus 0, 2g+3 otherwise).
struct CsaBasis {
  std::vector<FuncElem> h_list;
  Poly h;
  std::vector<FuncElem> f_noise;
  std::vector<FieldElem> gammas;
  int delta = 1;
};

CsaBasis csa_basis_genus0(const Field& f, int L, const std::vector<FieldElem>& gammas);

// Hyperelliptic basis of L((L+g-1) P_inf): needs L >= g, L = g (mod 2),
// J = (L+g)/2 distinct gammas with F(gamma) != 0.
CsaBasis csa_basis_hyper(const HyperellipticCurve& curve, int L,
                         const std::vector<FieldElem>& gammas);

// Response noise space h * L((X+T+4g) P_inf + (y)_0), realized as
// {h u / y : u in L((X+T+6g+1) P_inf)}; size X+T+5g+2.
std::vector<FuncElem> noise_basis(const HyperellipticCurve& curve, int X, int T,
                                  const CsaBasis& csa);

// Genus-0 variant h * F_q[x]^{<X+T}; size X+T.
std::vector<FuncElem> noise_basis_genus0(const Field& f, int X, int T, const CsaBasis& csa);

}  // namespace agpir
