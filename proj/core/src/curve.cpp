#include "agpir/curve.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "agpir/rng.hpp"

namespace agpir {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::string join_errors(const std::vector<std::string>& errors) {
  std::ostringstream out;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (i) out << "; ";
    out << errors[i];
  }
  return out.str();
}

}  // namespace

CurveValidation HyperellipticCurve::validate(const Field& field, int genus, const Poly& F,
                                             const Poly& H) {
  CurveValidation v;
  v.genus = genus;
  if (genus < 1) {
    v.errors.push_back("genus must be at least 1");
    return v;
  }
  if (F.deg() != 2 * genus + 1) {
    v.errors.push_back("F must have degree 2g+1 = " + std::to_string(2 * genus + 1) +
                       ", got degree " + std::to_string(F.deg()));
  } else if (F.leading() != 1) {
    v.errors.push_back("F must be monic");
  }
  if (H.deg() > genus + 1) {
    v.errors.push_back("deg(H) = " + std::to_string(H.deg()) + " exceeds g+1");
  } else if (H.deg() == genus + 1) {
    v.warnings.push_back("deg(H) = g+1 exceeds the usual bound deg(H) <= g");
  }
  if (!v.errors.empty()) return v;

  if (field.characteristic() != 2) {
    if (!H.is_zero()) {
      v.errors.push_back("H must be zero in odd characteristic");
      return v;
    }
    // Nonsingular iff F is squarefree.
    const Poly g = poly_gcd(field, F, poly_deriv(field, F));
    if (g.deg() > 0) {
      v.errors.push_back("curve is singular: F is not squarefree");
      return v;
    }
  } else {
    if (H.is_zero()) {
      v.errors.push_back("curve is singular: H must be nonzero in characteristic 2");
      return v;
    }
    // A singular affine point needs H(x0) = 0 together with either
    //   H'(x0) != 0 and F'(x0)^2 = F(x0) H'(x0)^2, or
    //   H'(x0) = 0 and F'(x0) = 0,
    // over the algebraic closure. Both branches reduce to gcd conditions.
    const Poly dH = poly_deriv(field, H);
    const Poly dF = poly_deriv(field, F);
    const Poly branch2 = poly_gcd(field, poly_gcd(field, H, dH), dF);
    if (branch2.deg() > 0) {
      v.errors.push_back("curve is singular: H, H', F' share a root");
      return v;
    }
    const Poly g1 = poly_add(field, poly_mul(field, dF, dF),
                             poly_mul(field, F, poly_mul(field, dH, dH)));
    const Poly branch1 = poly_gcd(field, H, g1);
    if (branch1.deg() > 0) {
      v.errors.push_back("curve is singular: H and F'^2 + F H'^2 share a root");
      return v;
    }
  }
  v.valid = true;
  return v;
}

HyperellipticCurve::HyperellipticCurve(Field field, int genus, Poly F, Poly H)
    : field_(std::move(field)), genus_(genus), f_(std::move(F)), h_(std::move(H)) {
  CurveValidation v = validate(field_, genus_, f_, h_);
  if (!v.valid) throw Error("curve: " + join_errors(v.errors));
  warnings_ = std::move(v.warnings);
}

bool HyperellipticCurve::contains(const CurvePoint& p) const {
  if (p.at_infinity) return true;
  const FieldElem lhs =
      field_.add(field_.mul(p.y, p.y), field_.mul(poly_eval(field_, h_, p.x), p.y));
  return lhs == poly_eval(field_, f_, p.x);
}

std::vector<FieldElem> HyperellipticCurve::fiber_ys(FieldElem x) const {
  const FieldElem hx = poly_eval(field_, h_, x);
  const FieldElem fx = poly_eval(field_, f_, x);
  std::vector<FieldElem> ys;
  for (std::uint32_t y = 0; y < field_.q(); ++y) {
    if (field_.add(field_.mul(y, y), field_.mul(hx, y)) == fx) ys.push_back(y);
  }
  return ys;
}

std::vector<CurvePoint> HyperellipticCurve::enumerate_points() const {
  std::vector<CurvePoint> pts;
  pts.push_back(CurvePoint::infinity());
  for (std::uint32_t x = 0; x < field_.q(); ++x) {
    for (const FieldElem y : fiber_ys(x)) pts.push_back(CurvePoint::affine(x, y));
  }
  return pts;
}

std::size_t HyperellipticCurve::count_points() const {
  std::size_t count = 1;
  for (std::uint32_t x = 0; x < field_.q(); ++x) count += fiber_ys(x).size();
  return count;
}

CurvePoint HyperellipticCurve::involution(const CurvePoint& p) const {
  if (!contains(p)) throw Error("curve: involution of a point not on the curve");
  if (p.at_infinity) return p;
  const FieldElem hy = poly_eval(field_, h_, p.x);
  return CurvePoint::affine(p.x, field_.sub(field_.neg(p.y), hy));
}

HyperellipticCurve::YZeros HyperellipticCurve::y_zeros() const {
  YZeros z;
  z.divisor_degree = 2 * genus_ + 1;
  // y vanishes at (x0, 0), which lies on the curve exactly when F(x0) = 0.
  for (std::uint32_t x = 0; x < field_.q(); ++x) {
    if (poly_eval(field_, f_, x) == 0) z.rational.push_back(CurvePoint::affine(x, 0));
  }
  return z;
}

std::uint64_t HyperellipticCurve::hasse_weil_bound() const {
  const std::uint64_t q = field_.q();
  return q + 1 + isqrt(4ull * genus_ * genus_ * q);
}

std::uint64_t HyperellipticCurve::point_bound() const {
  return std::min<std::uint64_t>(hasse_weil_bound(), 2ull * field_.q() + 1);
}

namespace {

Poly poly_from_digits(const std::vector<std::uint32_t>& digits) {
  std::vector<FieldElem> c(digits.begin(), digits.end());
  return Poly{std::move(c)};
}

// Odometer over coefficient tuples; returns false when the space wraps.
bool next_tuple(std::vector<std::uint32_t>& digits, std::uint32_t q) {
  for (auto& d : digits) {
    if (++d < q) return true;
    d = 0;
  }
  return false;
}

struct Candidate {
  std::size_t points;
  std::vector<FieldElem> f_coefs, h_coefs;
};

}  // namespace

std::vector<HyperellipticCurve> curve_search(const Field& field, int genus,
                                             std::size_t min_points, std::uint64_t budget,
                                             SearchMode mode, std::uint64_t seed) {
  if (genus < 1) throw Error("curve_search: genus must be at least 1");
  const std::uint32_t q = field.q();
  const std::size_t nf = static_cast<std::size_t>(2 * genus + 1);  // free coefficients of F
  const bool char2 = field.characteristic() == 2;
  const std::size_t nh = char2 ? static_cast<std::size_t>(genus + 1) : 0;

  std::vector<Candidate> found;
  std::set<std::pair<std::vector<FieldElem>, std::vector<FieldElem>>> seen;

  auto consider = [&](const std::vector<std::uint32_t>& fd, const std::vector<std::uint32_t>& hd) {
    std::vector<FieldElem> fc(fd.begin(), fd.end());
    fc.resize(nf, 0);
    fc.push_back(1);  // monic of degree 2g+1
    const Poly F{std::move(fc)};
    const Poly H = poly_from_digits(hd);
    if (!HyperellipticCurve::validate(field, genus, F, H).valid) return;
    if (mode == SearchMode::random && !seen.insert({F.coef, H.coef}).second) return;
    HyperellipticCurve c(field, genus, F, H);
    const std::size_t n = c.count_points();
    if (n >= min_points) found.push_back({n, F.coef, H.coef});
  };

  if (mode == SearchMode::exhaustive) {
    // Full space: q^(2g+1) choices of F, times q^(g+1) choices of H in
    // characteristic 2.
    long double space = 1.0L;
    for (std::size_t i = 0; i < nf + nh; ++i) space *= q;
    if (space > static_cast<long double>(budget)) {
      throw GuardError("curve_search: exhaustive space exceeds budget " + std::to_string(budget));
    }
    std::vector<std::uint32_t> hd(nh, 0);
    do {
      std::vector<std::uint32_t> fd(nf, 0);
      do {
        consider(fd, hd);
      } while (next_tuple(fd, q));
    } while (!hd.empty() && next_tuple(hd, q));
  } else {
    Rng rng(seed);
    for (std::uint64_t trial = 0; trial < budget; ++trial) {
      std::vector<std::uint32_t> fd(nf), hd(nh);
      for (auto& d : fd) d = static_cast<std::uint32_t>(rng.below(q));
      for (auto& d : hd) d = static_cast<std::uint32_t>(rng.below(q));
      consider(fd, hd);
    }
  }

  std::stable_sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    if (a.points != b.points) return a.points > b.points;
    if (a.f_coefs != b.f_coefs) return a.f_coefs < b.f_coefs;
    return a.h_coefs < b.h_coefs;
  });

  std::vector<HyperellipticCurve> out;
  out.reserve(found.size());
  for (const Candidate& c : found) {
    out.emplace_back(field, genus, Poly{std::vector<FieldElem>(c.f_coefs)},
                     Poly{std::vector<FieldElem>(c.h_coefs)});
  }
  return out;
}

}  // namespace agpir
