#include "agpir/poly.hpp"

#include <algorithm>
#include <sstream>

namespace agpir {

Poly Poly::monomial(std::size_t degree, FieldElem c) {
  if (c == 0) return Poly{};
  Poly p;
  p.coef.assign(degree + 1, 0);
  p.coef[degree] = c;
  return p;
}

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
  Poly r;
  r.coef.resize(std::max(a.coef.size(), b.coef.size()), 0);
  for (std::size_t i = 0; i < r.coef.size(); ++i) r.coef[i] = f.add(a.coef_at(i), b.coef_at(i));
  r.normalize();
  return r;
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
  Poly r;
  r.coef.resize(std::max(a.coef.size(), b.coef.size()), 0);
  for (std::size_t i = 0; i < r.coef.size(); ++i) r.coef[i] = f.sub(a.coef_at(i), b.coef_at(i));
  r.normalize();
  return r;
}

Poly poly_neg(const Field& f, const Poly& a) {
  Poly r = a;
  for (auto& c : r.coef) c = f.neg(c);
  return r;
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  Poly r;
  r.coef.assign(a.coef.size() + b.coef.size() - 1, 0);
  for (std::size_t i = 0; i < a.coef.size(); ++i) {
    if (a.coef[i] == 0) continue;
    for (std::size_t j = 0; j < b.coef.size(); ++j) {
      r.coef[i + j] = f.add(r.coef[i + j], f.mul(a.coef[i], b.coef[j]));
    }
  }
  r.normalize();
  return r;
}

Poly poly_scale(const Field& f, const Poly& a, FieldElem s) {
  if (s == 0) return Poly{};
  Poly r = a;
  for (auto& c : r.coef) c = f.mul(c, s);
  r.normalize();
  return r;
}

std::pair<Poly, Poly> poly_divrem(const Field& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("poly: division by the zero polynomial");
  if (a.deg() < b.deg()) return {Poly{}, a};
  Poly q, r = a;
  q.coef.assign(a.coef.size() - b.coef.size() + 1, 0);
  const FieldElem lead_inv = f.inv(b.leading());
  while (!r.is_zero() && r.deg() >= b.deg()) {
    const std::size_t shift = static_cast<std::size_t>(r.deg() - b.deg());
    const FieldElem c = f.mul(r.leading(), lead_inv);
    q.coef[shift] = c;
    for (std::size_t i = 0; i < b.coef.size(); ++i) {
      r.coef[shift + i] = f.sub(r.coef[shift + i], f.mul(c, b.coef[i]));
    }
    r.normalize();
  }
  q.normalize();
  return {q, r};
}

Poly poly_from_roots(const Field& f, const std::vector<FieldElem>& roots) {
  Poly r = Poly::one();
  for (const FieldElem root : roots) {
    r = poly_mul(f, r, Poly{{f.neg(root), 1}});
  }
  return r;
}

FieldElem poly_eval(const Field& f, const Poly& a, FieldElem x) {
  FieldElem r = 0;
  for (std::size_t i = a.coef.size(); i-- > 0;) {
    r = f.add(f.mul(r, x), a.coef[i]);
  }
  return r;
}

Poly poly_deriv(const Field& f, const Poly& a) {
  Poly r;
  if (a.coef.size() <= 1) return r;
  r.coef.resize(a.coef.size() - 1);
  for (std::size_t i = 1; i < a.coef.size(); ++i) {
    r.coef[i - 1] = f.mul(a.coef[i], static_cast<FieldElem>(i % f.characteristic()));
  }
  r.normalize();
  return r;
}

Poly poly_monic(const Field& f, const Poly& a) {
  if (a.is_zero()) return a;
  return poly_scale(f, a, f.inv(a.leading()));
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divrem(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, a);
}

std::string poly_to_string(const Poly& a) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.coef.size(); ++i) {
    if (i) out << ",";
    out << a.coef[i];
  }
  return out.str();
}

}  // namespace agpir
