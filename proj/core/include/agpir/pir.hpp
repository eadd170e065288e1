#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agpir/funcspace.hpp"
#include "agpir/lincode.hpp"
#include "agpir/lsss.hpp"

namespace agpir {

// Parameters of one runnable scheme instance.
//   genus 0:       N = L + X + T, requires q >= N + L
//   hyperelliptic: N = L + X + T + 6g + 2, requires N + g usable points,
//                  L >= g and L = g (mod 2)
struct PirParams {
  Field field;
  std::optional<HyperellipticCurve> curve;  // nullopt marks genus 0
  std::size_t L = 0, X = 0, T = 0, M = 1, N = 0;
  std::vector<FieldElem> gammas;  // L values (genus 0) or J = (L+g)/2 values
  int delta = 1;

  int genus() const { return curve ? curve->genus() : 0; }
};

struct Rational {
  std::uint64_t num = 0, den = 1;
  double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / den; }
};

// Download rate L/N in lowest terms.
Rational rate(const PirParams& params);

struct PirScheme {
  PirParams params;
  CsaBasis csa;
  std::vector<FuncElem> noise;       // response noise basis (dim X+T for genus 0,
                                     // X+T+5g+2 otherwise)
  std::vector<FuncElem> completion;  // g extra rows completing the decoder basis
  std::vector<EvalPoint> points;     // the N evaluation points
  Matrix decoder;                    // N x N: decoder[n][i] = basis_i(P_n)
  Matrix decoder_inv;
  Matrix h_rows;                     // L x N evaluations of h_1..h_L
  std::vector<Matrix> storage_noise;  // per fragment: (h/h_l) L((X+2g-1)P_inf) rows
  Matrix query_noise;                 // h L((T+2g-1)P_inf) rows
  std::vector<std::string> warnings;

  std::size_t storage_noise_dim() const {
    return storage_noise.empty() ? 0 : storage_noise[0].rows();
  }
  std::size_t query_noise_dim() const { return query_noise.rows(); }
};

struct GammaSelection {
  std::vector<FieldElem> gammas;
  std::size_t L = 0, N = 0;
};

// Greedy rate maximization: gammas drawn first from the x-coordinates unused
// by rational points, then from the used ones, while at least N + g usable
// points remain. Throws when no L >= g fits.
GammaSelection select_gammas(const HyperellipticCurve& curve, std::size_t X, std::size_t T);

// Fully-assembled scheme with a validated invertible decoder. If L is
// omitted it is maximized (genus 0: floor((q-X-T)/2); otherwise greedy gamma
// selection). X = 0 or T = 0 degenerates to an empty sharing-noise basis and
// is reported in warnings.
PirScheme plan_scheme_genus0(const Field& f, std::size_t X, std::size_t T,
                             std::optional<std::size_t> L, std::size_t M);
PirScheme plan_scheme(const HyperellipticCurve& curve, std::size_t X, std::size_t T,
                      std::optional<std::size_t> L, std::size_t M);

// Per-server stored shares, shaped M x L x N.
struct StorageState {
  std::size_t files = 0, fragments = 0, servers = 0;
  std::vector<FieldElem> data;

  FieldElem at(std::size_t m, std::size_t l, std::size_t n) const {
    return data[(m * fragments + l) * servers + n];
  }
  FieldElem& at(std::size_t m, std::size_t l, std::size_t n) {
    return data[(m * fragments + l) * servers + n];
  }
};

using QuerySet = StorageState;  // same M x L x N shape
using ResponseVector = std::vector<FieldElem>;

// s_hat(m,l) = s(m,l) + (h/h_l) * (random element of L((X+2g-1) P_inf)),
// evaluated at the N points; deterministic under the seed.
StorageState encode_storage(const PirScheme& scheme, const std::vector<std::vector<FieldElem>>& files,
                            std::uint64_t seed);

// q_hat(m,l) = delta(m,mu) h_l + h * (random element of L((T+2g-1) P_inf)).
// mu is 0-based here; the CLI accepts 1-based file indices.
QuerySet make_queries(const PirScheme& scheme, std::size_t mu, std::uint64_t seed);

// Generalized mode: retrieve arbitrary linear combinations with constants
// coeffs[m][l] in place of the Kronecker delta.
QuerySet make_queries_general(const PirScheme& scheme,
                              const std::vector<std::vector<FieldElem>>& coeffs,
                              std::uint64_t seed);

// r(n) = sum_l sum_m storage(m,l,n) * query(m,l,n); pure per server.
FieldElem server_respond(const PirScheme& scheme, std::size_t n, const StorageState& storage,
                         const QuerySet& queries);

// Fans out server_respond over all N servers; the transcript is identical to
// the sequential run for any thread count.
ResponseVector respond_all(const PirScheme& scheme, const StorageState& storage,
                           const QuerySet& queries, int threads = 1);

// Multiplies by the precomputed decoder inverse and returns the first L
// coordinates (the coefficients of h_1..h_L).
std::vector<FieldElem> decode(const PirScheme& scheme, const ResponseVector& responses);

struct SchemeCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};
struct VerifyReport {
  bool pass = true;
  std::vector<SchemeCheck> checks;
};

// (i) decoder rank N; (ii) min_l d_perp(C_l_noise) - 1 >= X; (iii) same for
// the query noise code and T; optionally the exhaustive projected-rank form.
VerifyReport verify_scheme(const PirScheme& scheme, bool exhaustive_rank = false);

struct RateSweepRow {
  std::size_t xt = 0;
  std::string construction;
  int genus = 0;
  bool feasible = false;
  std::size_t L = 0, N = 0;
  Rational r;
};

// One genus-0 row plus one row per supplied curve for each X = T value.
std::vector<RateSweepRow> rate_sweep(const Field& f,
                                     const std::vector<std::pair<std::string, HyperellipticCurve>>& curves,
                                     std::size_t xt_min, std::size_t xt_max);

}  // namespace agpir
