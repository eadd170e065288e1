#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "agpir/funcspace.hpp"
#include "agpir/lincode.hpp"
#include "agpir/matrix.hpp"

namespace agpir {

// Linear secret sharing scheme as a code pair (C, C_noise) presented by
// evaluation rows of the spanning functions; the stacked rows are full rank,
// which is the direct-sum condition C intersect C_noise = 0.
struct Lsss {
  Field field;
  std::optional<HyperellipticCurve> curve;  // nullopt marks a genus-0 scheme
  std::vector<FuncElem> secret_functions;
  std::vector<FuncElem> noise_functions;
  std::vector<EvalPoint> points;
  Matrix secret_rows;
  Matrix noise_rows;

  std::size_t parties() const { return points.size(); }
};

using ShareVector = std::vector<FieldElem>;

// Evaluates both function lists at the points and checks the direct sum.
Lsss lsss_make(Field field, std::optional<HyperellipticCurve> curve,
               std::vector<FuncElem> secret_functions, std::vector<FuncElem> noise_functions,
               std::vector<EvalPoint> points);

// Shamir sharing: C = RS_1(alpha), C_noise = ev(x F_q[x]^{<T}) = GRS_T(alpha, alpha).
// The alphas must be distinct and nonzero.
Lsss lsss_shamir(const Field& f, std::size_t n_parties, std::size_t t,
                 const std::vector<FieldElem>& alphas);

// Chen-Cramer sharing: C = constants, C_noise = ev(h L((T+2g-1) P_inf)).
// h must be nonconstant with zeros away from P_inf; the points must avoid
// P_inf and the zeros and poles of h, and number at least T + 2g.
Lsss lsss_chen_cramer(const HyperellipticCurve& curve, std::size_t t, const FuncElem& h,
                      const std::vector<CurvePoint>& points);

// Genus-0 degenerate path: C = constants, C_noise = ev(h F_q[x]^{<T}).
Lsss lsss_chen_cramer_genus0(const Field& f, std::size_t t, const Poly& h,
                             const std::vector<FieldElem>& alphas);

// shares = secret * secret_row + random noise combination; deterministic
// under the seed.
ShareVector lsss_share(const Lsss& scheme, FieldElem secret, std::uint64_t seed);

// Solves against [secret rows; noise rows]; throws on share vectors outside
// the span (corruption signal). Returns the first secret coefficient.
FieldElem lsss_reconstruct(const Lsss& scheme, const ShareVector& shares);
std::vector<FieldElem> lsss_reconstruct_all(const Lsss& scheme, const ShareVector& shares);

ShareVector lsss_combine(const Field& f, const std::vector<ShareVector>& shares,
                         const std::vector<FieldElem>& coefficients);

enum class SecurityMode { dual_distance, exhaustive_rank };

struct SecurityReport {
  bool pass = false;
  std::size_t t_claim = 0;
  SecurityMode mode = SecurityMode::dual_distance;
  int dual_dist = -1;  // set in dual_distance mode
  std::optional<std::vector<std::size_t>> counterexample;
};

// dual_distance mode checks d_perp(C_noise) - 1 >= t_claim; exhaustive mode
// checks rank(C_noise(S)) = |S| for every subset S of size t_claim
// (guard: C(N, T) <= 2^24).
SecurityReport lsss_verify_security(const Lsss& scheme, std::size_t t_claim, SecurityMode mode);

}  // namespace agpir
