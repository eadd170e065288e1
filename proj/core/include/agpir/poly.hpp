#pragma once

#include <string>
#include <utility>
#include <vector>

#include "agpir/field.hpp"

namespace agpir {

// Dense univariate polynomial over F_q. Coefficients are stored
// low-degree-first with no trailing zeros; the zero polynomial is the empty
// list. deg() returns kZeroDegree for it, standing in for -infinity.
struct Poly {
  std::vector<FieldElem> coef;

  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(std::vector<FieldElem> c) : coef(std::move(c)) { normalize(); }

  int deg() const { return static_cast<int>(coef.size()) - 1; }
  bool is_zero() const { return coef.empty(); }
  bool is_one() const { return coef.size() == 1 && coef[0] == 1; }
  FieldElem leading() const { return coef.back(); }
  FieldElem coef_at(std::size_t i) const { return i < coef.size() ? coef[i] : 0; }

  void normalize() {
    while (!coef.empty() && coef.back() == 0) coef.pop_back();
  }

  static Poly zero() { return Poly{}; }
  static Poly constant(FieldElem c) { return c == 0 ? Poly{} : Poly{{c}}; }
  static Poly one() { return constant(1); }
  static Poly x() { return Poly{{0, 1}}; }
  static Poly monomial(std::size_t degree, FieldElem c = 1);

  friend bool operator==(const Poly&, const Poly&) = default;
};

Poly poly_add(const Field& f, const Poly& a, const Poly& b);
Poly poly_sub(const Field& f, const Poly& a, const Poly& b);
Poly poly_neg(const Field& f, const Poly& a);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
Poly poly_scale(const Field& f, const Poly& a, FieldElem s);

// a = q*b + r with deg(r) < deg(b). Throws on b = 0.
std::pair<Poly, Poly> poly_divrem(const Field& f, const Poly& a, const Poly& b);

// Monic polynomial vanishing exactly on the given root multiset.
Poly poly_from_roots(const Field& f, const std::vector<FieldElem>& roots);

// Horner evaluation.
FieldElem poly_eval(const Field& f, const Poly& a, FieldElem x);

Poly poly_deriv(const Field& f, const Poly& a);
Poly poly_monic(const Field& f, const Poly& a);
Poly poly_gcd(const Field& f, Poly a, Poly b);  // monic unless both inputs are zero

// Coefficient list rendering, low degree first: "c0,c1,...,ck" ("" for zero).
std::string poly_to_string(const Poly& a);

}  // namespace agpir
