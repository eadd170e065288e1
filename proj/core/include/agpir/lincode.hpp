#pragma once

#include <cstdint>
#include <vector>

#include "agpir/curve.hpp"
#include "agpir/funcspace.hpp"
#include "agpir/matrix.hpp"

namespace agpir {

// Provenance of a code coordinate: a point on the affine line (GRS-style
// evaluation) or an affine curve point.
struct EvalPoint {
  enum class Kind { line, curve };
  Kind kind = Kind::line;
  FieldElem x = 0, y = 0;

  static EvalPoint line(FieldElem a) { return EvalPoint{Kind::line, a, 0}; }
  static EvalPoint on_curve(const CurvePoint& p) { return EvalPoint{Kind::curve, p.x, p.y}; }
  CurvePoint curve_point() const { return CurvePoint::affine(x, y); }

  friend bool operator==(const EvalPoint&, const EvalPoint&) = default;
};

// Linear [n, k] code presented by a full-rank generator matrix whose rows are
// evaluations of basis functions at the ordered point list.
struct LinearCode {
  std::size_t n = 0, k = 0;
  Matrix gen;
  std::vector<EvalPoint> points;
};

// Checks full row rank; the error message reports the rank found.
LinearCode code_from_rows(const Field& f, Matrix rows, std::vector<EvalPoint> points);

LinearCode code_from_functions(const HyperellipticCurve& curve,
                               const std::vector<FuncElem>& functions,
                               const std::vector<CurvePoint>& points);

LinearCode code_from_polys(const Field& f, const std::vector<Poly>& polys,
                           const std::vector<FieldElem>& alphas);

// Exhaustive minimum Hamming weight over all nonzero codewords.
// Guard: q^k <= 2^26. Partitionable across threads; the result is
// independent of the partitioning.
int min_distance(const Field& f, const LinearCode& code, int threads = 1);

// Dual minimum distance as the smallest U for which some U columns of the
// generator are linearly dependent; searched up to the k+1 ceiling.
int dual_distance(const Field& f, const LinearCode& code);

// Explicit dual code (null space of the generator); mainly a cross-check.
LinearCode dual_code(const Field& f, const LinearCode& code);

// Span of all coordinatewise products of generator-row pairs. Requires equal
// point lists.
LinearCode star_product(const Field& f, const LinearCode& c1, const LinearCode& c2);

// Lexicographically-first column subset of the given size with full rank,
// found by greedy elimination in canonical column order.
std::vector<std::size_t> information_set(const Field& f, const Matrix& gen, std::size_t size);
std::vector<std::size_t> information_set(const Field& f, const LinearCode& code,
                                         std::size_t size);

// Fraction of U-subsets of coordinates on which the projected code drops
// rank (insecure subsets). Guard: C(n, U) <= 2^24.
struct SigmaPoint {
  std::size_t u = 0;
  std::uint64_t insecure = 0;
  std::uint64_t total = 0;
  double sigma() const { return total == 0 ? 0.0 : static_cast<double>(insecure) / total; }
};
SigmaPoint sigma_profile(const Field& f, const LinearCode& noise_code, std::size_t u,
                         int threads = 1);

// Exact binomial coefficient; throws GuardError on uint64 overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace agpir
