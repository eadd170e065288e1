#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agpir/field.hpp"
#include "agpir/poly.hpp"

namespace agpir {

// A point of the curve: either an affine point (x, y) satisfying
// y^2 + H(x)y = F(x) exactly, or the unique point at infinity [0:1:0].
struct CurvePoint {
  bool at_infinity = false;
  FieldElem x = 0, y = 0;

  static CurvePoint infinity() { return CurvePoint{true, 0, 0}; }
  static CurvePoint affine(FieldElem x, FieldElem y) { return CurvePoint{false, x, y}; }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct CurveValidation {
  bool valid = false;
  int genus = 0;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
};

// Hyperelliptic curve y^2 + H(x)y = F(x) over F_q with F monic of degree
// 2g+1 and deg(H) <= g (deg(H) = g+1 is accepted with a warning). In odd
// characteristic H must be zero and F squarefree; in characteristic 2,
// nonsingularity is checked through gcd conditions on (H, H', F, F').
class HyperellipticCurve {
 public:
  HyperellipticCurve(Field field, int genus, Poly F, Poly H);

  static CurveValidation validate(const Field& field, int genus, const Poly& F, const Poly& H);

  const Field& field() const { return field_; }
  int genus() const { return genus_; }
  const Poly& F() const { return f_; }
  const Poly& H() const { return h_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  bool contains(const CurvePoint& p) const;

  // y-values over a fixed x, ascending. Brute-force scan over F_q.
  std::vector<FieldElem> fiber_ys(FieldElem x) const;

  // All F_q-rational points in canonical order: P_inf first, then affine
  // points sorted by (x, y).
  std::vector<CurvePoint> enumerate_points() const;
  std::size_t count_points() const;

  // iota(x, y) = (x, -y - H(x)); fixes P_inf. Throws if p is not on the curve.
  CurvePoint involution(const CurvePoint& p) const;

  struct YZeros {
    std::vector<CurvePoint> rational;  // rational points where y vanishes
    int divisor_degree = 0;            // deg((y)_0) = 2g+1, non-rational zeros included
  };
  YZeros y_zeros() const;

  std::uint64_t hasse_weil_bound() const;  // q + 1 + floor(2g sqrt(q))
  std::uint64_t point_bound() const;       // min(hasse_weil, 2q + 1)

 private:
  Field field_;
  int genus_;
  Poly f_, h_;
  std::vector<std::string> warnings_;
};

enum class SearchMode { exhaustive, random };

// Valid curves over the field with at least min_points rational points,
// sorted by point count descending (ties broken by coefficient order).
// Exhaustive mode requires the full (F, H) space to fit in the budget;
// random mode draws budget candidates from the given seed.
std::vector<HyperellipticCurve> curve_search(const Field& field, int genus,
                                             std::size_t min_points, std::uint64_t budget,
                                             SearchMode mode, std::uint64_t seed);

}  // namespace agpir
