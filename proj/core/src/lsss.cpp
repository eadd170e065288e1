#include "agpir/lsss.hpp"

#include <algorithm>
#include <set>

#include "agpir/rng.hpp"

namespace agpir {

namespace {

constexpr std::uint64_t kExhaustiveGuard = std::uint64_t{1} << 24;

Matrix eval_rows(const Lsss& scheme, const std::vector<FuncElem>& functions) {
  Matrix rows(functions.size(), scheme.points.size());
  for (std::size_t i = 0; i < functions.size(); ++i) {
    for (std::size_t j = 0; j < scheme.points.size(); ++j) {
      const EvalPoint& p = scheme.points[j];
      rows.at(i, j) = (p.kind == EvalPoint::Kind::curve)
                          ? ff_eval(*scheme.curve, functions[i], p.curve_point())
                          : ff_eval_line(scheme.field, functions[i], p.x);
    }
  }
  return rows;
}

Matrix stacked_rows(const Lsss& scheme) {
  Matrix all = scheme.secret_rows;
  for (std::size_t i = 0; i < scheme.noise_rows.rows(); ++i) {
    all.append_row(scheme.noise_rows.row_vec(i));
  }
  return all;
}

}  // namespace

Lsss lsss_make(Field field, std::optional<HyperellipticCurve> curve,
               std::vector<FuncElem> secret_functions, std::vector<FuncElem> noise_functions,
               std::vector<EvalPoint> points) {
  if (secret_functions.empty()) throw Error("lsss: at least one secret function is required");
  for (const EvalPoint& p : points) {
    if (p.kind == EvalPoint::Kind::curve && !curve) {
      throw Error("lsss: curve evaluation points need a curve");
    }
  }
  Lsss scheme{std::move(field), std::move(curve), std::move(secret_functions),
              std::move(noise_functions), std::move(points), Matrix{}, Matrix{}};
  scheme.secret_rows = eval_rows(scheme, scheme.secret_functions);
  scheme.noise_rows = scheme.noise_functions.empty()
                          ? Matrix(0, scheme.points.size())
                          : eval_rows(scheme, scheme.noise_functions);
  const std::size_t dims = scheme.secret_functions.size() + scheme.noise_functions.size();
  if (mat_rank(scheme.field, stacked_rows(scheme)) != dims) {
    throw Error("lsss: secret and noise evaluations are not in direct sum");
  }
  return scheme;
}

Lsss lsss_shamir(const Field& f, std::size_t n_parties, std::size_t t,
                 const std::vector<FieldElem>& alphas) {
  if (alphas.size() != n_parties) throw Error("lsss: expected one alpha per party");
  std::set<FieldElem> distinct(alphas.begin(), alphas.end());
  if (distinct.size() != alphas.size()) throw Error("lsss: alphas must be distinct");
  if (distinct.count(0) != 0) throw Error("lsss: alphas must be nonzero");
  if (t + 1 > n_parties) throw Error("lsss: need more parties than the degree bound T");

  std::vector<FuncElem> noise;
  for (std::size_t i = 1; i <= t; ++i) noise.push_back(FuncElem::from_poly(Poly::monomial(i)));
  std::vector<EvalPoint> points;
  for (const FieldElem a : alphas) points.push_back(EvalPoint::line(a));
  return lsss_make(f, std::nullopt, {FuncElem::one()}, std::move(noise), std::move(points));
}

Lsss lsss_chen_cramer(const HyperellipticCurve& curve, std::size_t t, const FuncElem& h,
                      const std::vector<CurvePoint>& points) {
  const Field& f = curve.field();
  const int g = curve.genus();
  if (h.is_zero()) throw Error("lsss: h must be nonzero");
  if (points.size() < t + 2 * g) {
    throw Error("lsss: need at least T + 2g = " + std::to_string(t + 2 * g) + " points");
  }
  std::vector<EvalPoint> pts;
  for (const CurvePoint& p : points) {
    if (p.at_infinity) throw Error("lsss: points must avoid the point at infinity");
    if (!curve.contains(p)) throw Error("lsss: evaluation point not on the curve");
    if (!ff_evaluable(curve, h, p)) throw Error("lsss: evaluation point hits a pole of h");
    if (ff_eval(curve, h, p) == 0) throw Error("lsss: evaluation point hits a zero of h");
    pts.push_back(EvalPoint::on_curve(p));
  }
  std::vector<FuncElem> noise;
  for (const FuncElem& u : rr_basis(curve, static_cast<int>(t) + 2 * g - 1).elements) {
    noise.push_back(ff_mul(curve, h, u));
  }
  return lsss_make(f, curve, {FuncElem::one()}, std::move(noise), std::move(pts));
}

Lsss lsss_chen_cramer_genus0(const Field& f, std::size_t t, const Poly& h,
                             const std::vector<FieldElem>& alphas) {
  if (h.deg() < 1) throw Error("lsss: h must be nonconstant");
  std::vector<EvalPoint> pts;
  for (const FieldElem a : alphas) {
    if (poly_eval(f, h, a) == 0) throw Error("lsss: evaluation point hits a zero of h");
    pts.push_back(EvalPoint::line(a));
  }
  std::vector<FuncElem> noise;
  for (std::size_t i = 0; i < t; ++i) {
    noise.push_back(FuncElem::from_poly(poly_mul(f, h, Poly::monomial(i))));
  }
  return lsss_make(f, std::nullopt, {FuncElem::one()}, std::move(noise), std::move(pts));
}

ShareVector lsss_share(const Lsss& scheme, FieldElem secret, std::uint64_t seed) {
  const Field& f = scheme.field;
  const std::size_t n = scheme.parties();
  ShareVector shares(n, 0);
  for (std::size_t j = 0; j < n; ++j) shares[j] = f.mul(secret, scheme.secret_rows.at(0, j));
  Rng rng(seed);
  for (std::size_t i = 0; i < scheme.noise_rows.rows(); ++i) {
    const FieldElem r = rng.uniform(f);
    if (r == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      shares[j] = f.add(shares[j], f.mul(r, scheme.noise_rows.at(i, j)));
    }
  }
  return shares;
}

std::vector<FieldElem> lsss_reconstruct_all(const Lsss& scheme, const ShareVector& shares) {
  if (shares.size() != scheme.parties()) throw Error("lsss: share vector length mismatch");
  const Matrix all = stacked_rows(scheme);
  // Solve beta^T * all = shares, i.e. all^T beta = shares.
  Matrix t(all.cols(), all.rows());
  for (std::size_t i = 0; i < all.rows(); ++i) {
    for (std::size_t j = 0; j < all.cols(); ++j) t.at(j, i) = all.at(i, j);
  }
  const auto beta = mat_solve(scheme.field, t, shares);
  if (!beta) throw Error("lsss: inconsistent share vector (outside the scheme span)");
  return std::vector<FieldElem>(beta->begin(),
                                beta->begin() + static_cast<std::ptrdiff_t>(
                                                    scheme.secret_functions.size()));
}

FieldElem lsss_reconstruct(const Lsss& scheme, const ShareVector& shares) {
  return lsss_reconstruct_all(scheme, shares)[0];
}

ShareVector lsss_combine(const Field& f, const std::vector<ShareVector>& shares,
                         const std::vector<FieldElem>& coefficients) {
  if (shares.size() != coefficients.size()) {
    throw Error("lsss: one coefficient per share vector is required");
  }
  if (shares.empty()) throw Error("lsss: nothing to combine");
  const std::size_t n = shares[0].size();
  ShareVector out(n, 0);
  for (std::size_t s = 0; s < shares.size(); ++s) {
    if (shares[s].size() != n) throw Error("lsss: share vector length mismatch");
    for (std::size_t j = 0; j < n; ++j) {
      out[j] = f.add(out[j], f.mul(coefficients[s], shares[s][j]));
    }
  }
  return out;
}

SecurityReport lsss_verify_security(const Lsss& scheme, std::size_t t_claim, SecurityMode mode) {
  SecurityReport report;
  report.t_claim = t_claim;
  report.mode = mode;
  if (t_claim == 0) {
    report.pass = true;
    return report;
  }
  if (scheme.noise_rows.rows() == 0) {
    report.pass = false;  // no noise: any nonempty subset sees the secret
    return report;
  }
  const Field& f = scheme.field;
  if (mode == SecurityMode::dual_distance) {
    LinearCode noise = code_from_rows(f, scheme.noise_rows, scheme.points);
    report.dual_dist = dual_distance(f, noise);
    report.pass = static_cast<std::size_t>(report.dual_dist - 1) >= t_claim;
    return report;
  }
  if (binomial(scheme.parties(), t_claim) > kExhaustiveGuard) {
    throw GuardError("lsss_verify_security: C(N, T) exceeds the 2^24 guard");
  }
  report.pass = true;
  std::vector<std::size_t> idx(t_claim);
  for (std::size_t i = 0; i < t_claim; ++i) idx[i] = i;
  const std::size_t n = scheme.parties();
  while (true) {
    if (rank_of_columns(f, scheme.noise_rows, idx) < t_claim) {
      report.pass = false;
      report.counterexample = idx;
      return report;
    }
    bool advanced = false;
    std::size_t i = t_claim;
    while (i-- > 0) {
      if (idx[i] != n - t_claim + i) {
        ++idx[i];
        for (std::size_t j = i + 1; j < t_claim; ++j) idx[j] = idx[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return report;
}

}  // namespace agpir
