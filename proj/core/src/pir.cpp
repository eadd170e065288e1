#include "agpir/pir.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "agpir/rng.hpp"

namespace agpir {

Rational rate(const PirParams& params) {
  if (params.N == 0) return Rational{0, 1};
  const std::uint64_t g = std::gcd<std::uint64_t>(params.L, params.N);
  return Rational{params.L / g, params.N / g};
}

namespace {

// Gamma candidates in greedy order: free x-coordinates (no rational point
// above them) ascending, then used x-coordinates ascending; F(gamma) = 0 is
// excluded throughout since those are ramified y-zeros.
struct GammaPool {
  std::vector<FieldElem> order;
  std::vector<std::size_t> fiber_cost;  // usable points lost when picking order[i]
  std::size_t usable_base = 0;          // affine points with y != 0
};

GammaPool gamma_pool(const HyperellipticCurve& curve) {
  const Field& f = curve.field();
  GammaPool pool;
  std::vector<std::size_t> nonzero_fiber(f.q(), 0);
  std::vector<bool> has_point(f.q(), false);
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    for (const FieldElem y : curve.fiber_ys(x)) {
      has_point[x] = true;
      if (y != 0) ++nonzero_fiber[x];
    }
    pool.usable_base += nonzero_fiber[x];
  }
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    if (!has_point[x] && poly_eval(f, curve.F(), x) != 0) {
      pool.order.push_back(x);
      pool.fiber_cost.push_back(0);
    }
  }
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    if (has_point[x] && poly_eval(f, curve.F(), x) != 0) {
      pool.order.push_back(x);
      pool.fiber_cost.push_back(nonzero_fiber[x]);
    }
  }
  return pool;
}

std::size_t server_count(std::size_t L, std::size_t X, std::size_t T, int g) {
  return L + X + T + 6 * static_cast<std::size_t>(g) + 2;
}

std::optional<GammaSelection> select_from_pool(const GammaPool& pool, int g, std::size_t X,
                                               std::size_t T) {
  GammaSelection best;
  bool found = false;
  std::size_t cost = 0;
  for (std::size_t j = 1; j <= pool.order.size(); ++j) {
    cost += pool.fiber_cost[j - 1];
    if (j < static_cast<std::size_t>(g)) continue;  // L = 2J - g >= g needs J >= g
    const std::size_t L = 2 * j - static_cast<std::size_t>(g);
    const std::size_t N = server_count(L, X, T, g);
    const std::size_t usable = pool.usable_base - cost;
    if (usable >= N + static_cast<std::size_t>(g)) {
      best.gammas.assign(pool.order.begin(), pool.order.begin() + static_cast<std::ptrdiff_t>(j));
      best.L = L;
      best.N = N;
      found = true;
    } else {
      break;  // N grows faster than the pool from here on
    }
  }
  if (!found) return std::nullopt;
  return best;
}

}  // namespace

GammaSelection select_gammas(const HyperellipticCurve& curve, std::size_t X, std::size_t T) {
  const auto sel = select_from_pool(gamma_pool(curve), curve.genus(), X, T);
  if (!sel) {
    throw Error("select_gammas: no feasible L >= g for X = " + std::to_string(X) +
                ", T = " + std::to_string(T));
  }
  return *sel;
}

namespace {

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  }
  return t;
}

void warn_degenerate(PirScheme& scheme) {
  if (scheme.params.X == 0) {
    scheme.warnings.push_back("X = 0: storage is not secure (empty storage-noise basis)");
  }
  if (scheme.params.T == 0) {
    scheme.warnings.push_back("T = 0: queries are not private (empty query-noise basis)");
  }
}

}  // namespace

PirScheme plan_scheme_genus0(const Field& f, std::size_t X, std::size_t T,
                             std::optional<std::size_t> L_opt, std::size_t M) {
  if (M < 1) throw Error("plan_scheme: M must be at least 1");
  std::size_t L;
  if (L_opt) {
    L = *L_opt;
  } else if (f.q() > X + T + 1) {
    L = (f.q() - X - T) / 2;
  } else {
    throw Error("plan_scheme: field too small for any L >= 1 with X = " + std::to_string(X) +
                ", T = " + std::to_string(T));
  }
  if (L < 1) throw Error("plan_scheme: L must be at least 1");
  const std::size_t N = L + X + T;
  if (f.q() < N + L) {
    throw Error("plan_scheme: genus-0 construction needs q >= N + L = " + std::to_string(N + L) +
                ", have q = " + std::to_string(f.q()));
  }

  PirScheme scheme;
  scheme.params.field = f;
  scheme.params.L = L;
  scheme.params.X = X;
  scheme.params.T = T;
  scheme.params.M = M;
  scheme.params.N = N;
  scheme.params.delta = 1;
  warn_degenerate(scheme);

  // Canonical choices: gammas are the first L field elements, evaluation
  // points the next N (all distinct from the roots of h).
  std::vector<FieldElem> gammas(L);
  for (std::size_t i = 0; i < L; ++i) gammas[i] = static_cast<FieldElem>(i);
  scheme.params.gammas = gammas;
  scheme.csa = csa_basis_genus0(f, static_cast<int>(L), gammas);
  scheme.noise = noise_basis_genus0(f, static_cast<int>(X), static_cast<int>(T), scheme.csa);

  std::vector<FieldElem> alphas(N);
  for (std::size_t i = 0; i < N; ++i) alphas[i] = static_cast<FieldElem>(L + i);
  for (const FieldElem a : alphas) scheme.points.push_back(EvalPoint::line(a));

  std::vector<FuncElem> decoder_fns = scheme.csa.h_list;
  decoder_fns.insert(decoder_fns.end(), scheme.noise.begin(), scheme.noise.end());
  Matrix rows(decoder_fns.size(), N);
  for (std::size_t i = 0; i < decoder_fns.size(); ++i) {
    for (std::size_t j = 0; j < N; ++j) rows.at(i, j) = ff_eval_line(f, decoder_fns[i], alphas[j]);
  }
  scheme.decoder = transpose(rows);
  auto inv = mat_inverse(f, scheme.decoder);
  if (!inv) throw Error("plan_scheme: internal error, decoder matrix is singular");
  scheme.decoder_inv = std::move(*inv);

  scheme.h_rows = Matrix(L, N);
  for (std::size_t l = 0; l < L; ++l) {
    for (std::size_t j = 0; j < N; ++j) {
      scheme.h_rows.at(l, j) = ff_eval_line(f, scheme.csa.h_list[l], alphas[j]);
    }
  }
  for (std::size_t l = 0; l < L; ++l) {
    Matrix sn(X, N);
    for (std::size_t i = 0; i < X; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        const FieldElem base = ff_eval_line(f, scheme.csa.f_noise[l], alphas[j]);
        sn.at(i, j) = f.mul(base, f.pow(alphas[j], i));
      }
    }
    scheme.storage_noise.push_back(std::move(sn));
  }
  scheme.query_noise = Matrix(T, N);
  for (std::size_t i = 0; i < T; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      scheme.query_noise.at(i, j) =
          f.mul(poly_eval(f, scheme.csa.h, alphas[j]), f.pow(alphas[j], i));
    }
  }
  return scheme;
}

PirScheme plan_scheme(const HyperellipticCurve& curve, std::size_t X, std::size_t T,
                      std::optional<std::size_t> L_opt, std::size_t M) {
  if (M < 1) throw Error("plan_scheme: M must be at least 1");
  const Field& f = curve.field();
  const int g = curve.genus();
  const GammaPool pool = gamma_pool(curve);

  std::size_t L, N, J;
  if (L_opt) {
    L = *L_opt;
    if (L < static_cast<std::size_t>(g)) throw Error("plan_scheme: L must be at least g");
    if ((L - static_cast<std::size_t>(g)) % 2 != 0) {
      throw Error("plan_scheme: L and g must have the same parity");
    }
    J = (L + static_cast<std::size_t>(g)) / 2;
    N = server_count(L, X, T, g);
    if (J > pool.order.size()) {
      throw Error("plan_scheme: not enough admissible gamma values for J = " + std::to_string(J));
    }
    std::size_t cost = 0;
    for (std::size_t i = 0; i < J; ++i) cost += pool.fiber_cost[i];
    if (pool.usable_base - cost < N + static_cast<std::size_t>(g)) {
      throw Error("plan_scheme: fewer than N + g = " + std::to_string(N + g) +
                  " usable rational points");
    }
  } else {
    const auto sel = select_from_pool(pool, g, X, T);
    if (!sel) {
      throw Error("select_gammas: no feasible L >= g for X = " + std::to_string(X) +
                  ", T = " + std::to_string(T));
    }
    L = sel->L;
    N = sel->N;
    J = sel->gammas.size();
  }

  PirScheme scheme;
  scheme.params.field = f;
  scheme.params.curve = curve;
  scheme.params.L = L;
  scheme.params.X = X;
  scheme.params.T = T;
  scheme.params.M = M;
  scheme.params.N = N;
  scheme.params.delta = 2 * g + 3;
  scheme.params.gammas.assign(pool.order.begin(),
                              pool.order.begin() + static_cast<std::ptrdiff_t>(J));
  warn_degenerate(scheme);

  scheme.csa = csa_basis_hyper(curve, static_cast<int>(L), scheme.params.gammas);
  scheme.noise =
      noise_basis(curve, static_cast<int>(X), static_cast<int>(T), scheme.csa);
  const std::size_t noise_dim = scheme.noise.size();  // X + T + 5g + 2

  // Usable points in canonical order: affine, y != 0, h(x) != 0.
  const std::set<FieldElem> gamma_set(scheme.params.gammas.begin(), scheme.params.gammas.end());
  std::vector<CurvePoint> usable;
  for (const CurvePoint& p : curve.enumerate_points()) {
    if (p.at_infinity || p.y == 0) continue;
    if (gamma_set.count(p.x)) continue;
    usable.push_back(p);
  }
  const std::size_t want = N + static_cast<std::size_t>(g);
  if (usable.size() < want) {
    throw Error("plan_scheme: internal error, usable point count dropped below N + g");
  }
  usable.resize(want);

  // Information set of the length-(N+g) code spanned by a monomial basis of
  // the ambient space L((L+X+T+5g) P_inf + (y)_0).
  const int ambient_m = static_cast<int>(L + X + T) + 7 * g + 1;
  const std::vector<FuncElem> ambient = div_y_basis(curve, ambient_m);
  if (ambient.size() != N) throw Error("plan_scheme: internal error, ambient basis size");
  Matrix ambient_rows(N, want);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < want; ++j) {
      ambient_rows.at(i, j) = ff_eval(curve, ambient[i], usable[j]);
    }
  }
  const std::vector<std::size_t> info = information_set(f, ambient_rows, N);
  std::vector<CurvePoint> pts;
  pts.reserve(N);
  for (const std::size_t c : info) pts.push_back(usable[c]);
  for (const CurvePoint& p : pts) scheme.points.push_back(EvalPoint::on_curve(p));

  // Decoder rows: h_1..h_L, the noise basis, then enough ambient monomials
  // to complete a basis (exactly g of them).
  std::vector<FuncElem> decoder_fns = scheme.csa.h_list;
  decoder_fns.insert(decoder_fns.end(), scheme.noise.begin(), scheme.noise.end());
  RankTracker tracker(f, N);
  Matrix rows(0, N);
  for (const FuncElem& fn : decoder_fns) {
    std::vector<FieldElem> row(N);
    for (std::size_t j = 0; j < N; ++j) row[j] = ff_eval(curve, fn, pts[j]);
    if (!tracker.try_add(row)) {
      throw Error("plan_scheme: internal error, information/noise rows are dependent");
    }
    rows.append_row(row);
  }
  for (const FuncElem& fn : ambient) {
    if (rows.rows() == N) break;
    std::vector<FieldElem> row(N);
    for (std::size_t j = 0; j < N; ++j) row[j] = ff_eval(curve, fn, pts[j]);
    if (tracker.try_add(row)) {
      rows.append_row(row);
      scheme.completion.push_back(fn);
      decoder_fns.push_back(fn);
    }
  }
  if (rows.rows() != N || scheme.completion.size() != static_cast<std::size_t>(g)) {
    throw Error("plan_scheme: internal error, decoder completion failed");
  }
  if (L + noise_dim + scheme.completion.size() != N) {
    throw Error("plan_scheme: internal error, decoder dimension bookkeeping");
  }

  scheme.decoder = transpose(rows);
  auto inv = mat_inverse(f, scheme.decoder);
  if (!inv) throw Error("plan_scheme: internal error, decoder matrix is singular");
  scheme.decoder_inv = std::move(*inv);

  scheme.h_rows = Matrix(L, N);
  for (std::size_t l = 0; l < L; ++l) {
    for (std::size_t j = 0; j < N; ++j) {
      scheme.h_rows.at(l, j) = ff_eval(curve, scheme.csa.h_list[l], pts[j]);
    }
  }

  const std::vector<FuncElem> storage_basis =
      X == 0 ? std::vector<FuncElem>{}
             : rr_basis(curve, static_cast<int>(X) + 2 * g - 1).elements;
  for (std::size_t l = 0; l < L; ++l) {
    Matrix sn(storage_basis.size(), N);
    for (std::size_t i = 0; i < storage_basis.size(); ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        sn.at(i, j) = f.mul(ff_eval(curve, scheme.csa.f_noise[l], pts[j]),
                            ff_eval(curve, storage_basis[i], pts[j]));
      }
    }
    scheme.storage_noise.push_back(std::move(sn));
  }

  const std::vector<FuncElem> query_basis =
      T == 0 ? std::vector<FuncElem>{}
             : rr_basis(curve, static_cast<int>(T) + 2 * g - 1).elements;
  scheme.query_noise = Matrix(query_basis.size(), N);
  for (std::size_t i = 0; i < query_basis.size(); ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      scheme.query_noise.at(i, j) = f.mul(poly_eval(f, scheme.csa.h, pts[j].x),
                                          ff_eval(curve, query_basis[i], pts[j]));
    }
  }
  return scheme;
}

StorageState encode_storage(const PirScheme& scheme,
                            const std::vector<std::vector<FieldElem>>& files,
                            std::uint64_t seed) {
  const Field& f = scheme.params.field;
  const std::size_t M = scheme.params.M, L = scheme.params.L, N = scheme.params.N;
  if (files.size() != M) throw Error("encode_storage: expected M files");
  for (const auto& file : files) {
    if (file.size() != L) throw Error("encode_storage: each file needs L fragments");
  }
  StorageState st{M, L, N, std::vector<FieldElem>(M * L * N, 0)};
  Rng rng(seed);
  for (std::size_t m = 0; m < M; ++m) {
    for (std::size_t l = 0; l < L; ++l) {
      const FieldElem s = files[m][l];
      // secret rides on the constants: s at every server
      for (std::size_t n = 0; n < N; ++n) st.at(m, l, n) = s;
      const Matrix& noise = scheme.storage_noise[l];
      for (std::size_t i = 0; i < noise.rows(); ++i) {
        const FieldElem r = rng.uniform(f);
        if (r == 0) continue;
        for (std::size_t n = 0; n < N; ++n) {
          st.at(m, l, n) = f.add(st.at(m, l, n), f.mul(r, noise.at(i, n)));
        }
      }
    }
  }
  return st;
}

QuerySet make_queries_general(const PirScheme& scheme,
                              const std::vector<std::vector<FieldElem>>& coeffs,
                              std::uint64_t seed) {
  const Field& f = scheme.params.field;
  const std::size_t M = scheme.params.M, L = scheme.params.L, N = scheme.params.N;
  if (coeffs.size() != M) throw Error("make_queries: expected M coefficient rows");
  QuerySet qs{M, L, N, std::vector<FieldElem>(M * L * N, 0)};
  Rng rng(seed);
  for (std::size_t m = 0; m < M; ++m) {
    if (coeffs[m].size() != L) throw Error("make_queries: expected L coefficients per file");
    for (std::size_t l = 0; l < L; ++l) {
      const FieldElem c = coeffs[m][l];
      for (std::size_t n = 0; n < N; ++n) qs.at(m, l, n) = f.mul(c, scheme.h_rows.at(l, n));
      for (std::size_t i = 0; i < scheme.query_noise.rows(); ++i) {
        const FieldElem r = rng.uniform(f);
        if (r == 0) continue;
        for (std::size_t n = 0; n < N; ++n) {
          qs.at(m, l, n) = f.add(qs.at(m, l, n), f.mul(r, scheme.query_noise.at(i, n)));
        }
      }
    }
  }
  return qs;
}

QuerySet make_queries(const PirScheme& scheme, std::size_t mu, std::uint64_t seed) {
  if (mu >= scheme.params.M) {
    throw Error("make_queries: file index " + std::to_string(mu + 1) + " out of range 1.." +
                std::to_string(scheme.params.M));
  }
  std::vector<std::vector<FieldElem>> coeffs(scheme.params.M,
                                             std::vector<FieldElem>(scheme.params.L, 0));
  for (std::size_t l = 0; l < scheme.params.L; ++l) coeffs[mu][l] = 1;
  return make_queries_general(scheme, coeffs, seed);
}

FieldElem server_respond(const PirScheme& scheme, std::size_t n, const StorageState& storage,
                         const QuerySet& queries) {
  const Field& f = scheme.params.field;
  if (n >= scheme.params.N) throw Error("server_respond: server index out of range");
  FieldElem r = 0;
  for (std::size_t l = 0; l < scheme.params.L; ++l) {
    for (std::size_t m = 0; m < scheme.params.M; ++m) {
      r = f.add(r, f.mul(storage.at(m, l, n), queries.at(m, l, n)));
    }
  }
  return r;
}

ResponseVector respond_all(const PirScheme& scheme, const StorageState& storage,
                           const QuerySet& queries, int threads) {
  const std::size_t N = scheme.params.N;
  ResponseVector responses(N, 0);
  if (threads <= 1) {
    for (std::size_t n = 0; n < N; ++n) responses[n] = server_respond(scheme, n, storage, queries);
    return responses;
  }
  const unsigned nt = std::min<unsigned>(static_cast<unsigned>(threads), N);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < nt; ++t) {
    workers.emplace_back([&, t]() {
      for (std::size_t n = t; n < N; n += nt) {
        responses[n] = server_respond(scheme, n, storage, queries);
      }
    });
  }
  for (auto& w : workers) w.join();
  return responses;
}

std::vector<FieldElem> decode(const PirScheme& scheme, const ResponseVector& responses) {
  if (responses.size() != scheme.params.N) throw Error("decode: response length mismatch");
  const std::vector<FieldElem> beta = mat_vec(scheme.params.field, scheme.decoder_inv, responses);
  return std::vector<FieldElem>(beta.begin(),
                                beta.begin() + static_cast<std::ptrdiff_t>(scheme.params.L));
}

VerifyReport verify_scheme(const PirScheme& scheme, bool exhaustive_rank) {
  const Field& f = scheme.params.field;
  VerifyReport report;
  auto add = [&](std::string name, bool pass, std::string detail) {
    report.pass = report.pass && pass;
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  const std::size_t rank = mat_rank(f, scheme.decoder);
  add("decoder-rank", rank == scheme.params.N,
      "rank " + std::to_string(rank) + " of " + std::to_string(scheme.params.N));

  if (scheme.params.X == 0) {
    add("storage-security", true, "X = 0 (degenerate, nothing to check)");
  } else {
    int min_dd = -1;
    for (std::size_t l = 0; l < scheme.params.L; ++l) {
      LinearCode code = code_from_rows(f, scheme.storage_noise[l], scheme.points);
      const int dd = dual_distance(f, code);
      if (min_dd < 0 || dd < min_dd) min_dd = dd;
    }
    add("storage-security", static_cast<std::size_t>(min_dd - 1) >= scheme.params.X,
        "min_l d_perp(C_l_noise) - 1 = " + std::to_string(min_dd - 1) + " vs X = " +
            std::to_string(scheme.params.X));
  }

  if (scheme.params.T == 0) {
    add("query-privacy", true, "T = 0 (degenerate, nothing to check)");
  } else {
    LinearCode code = code_from_rows(f, scheme.query_noise, scheme.points);
    const int dd = dual_distance(f, code);
    add("query-privacy", static_cast<std::size_t>(dd - 1) >= scheme.params.T,
        "d_perp(D_noise) - 1 = " + std::to_string(dd - 1) + " vs T = " +
            std::to_string(scheme.params.T));
  }

  if (exhaustive_rank) {
    if (scheme.params.X > 0) {
      bool ok = true;
      for (std::size_t l = 0; l < scheme.params.L && ok; ++l) {
        LinearCode code = code_from_rows(f, scheme.storage_noise[l], scheme.points);
        const SigmaPoint sp = sigma_profile(f, code, scheme.params.X);
        ok = sp.insecure == 0;
      }
      add("storage-security-exhaustive", ok, "all X-subsets project with full rank");
    }
    if (scheme.params.T > 0) {
      LinearCode code = code_from_rows(f, scheme.query_noise, scheme.points);
      const SigmaPoint sp = sigma_profile(f, code, scheme.params.T);
      add("query-privacy-exhaustive", sp.insecure == 0,
          "all T-subsets project with full rank");
    }
  }
  return report;
}

std::vector<RateSweepRow> rate_sweep(
    const Field& f, const std::vector<std::pair<std::string, HyperellipticCurve>>& curves,
    std::size_t xt_min, std::size_t xt_max) {
  std::vector<GammaPool> pools;
  pools.reserve(curves.size());
  for (const auto& [label, curve] : curves) {
    if (curve.field() != f) throw Error("rate_sweep: curve field mismatch");
    pools.push_back(gamma_pool(curve));
  }
  std::vector<RateSweepRow> rows;
  for (std::size_t xt = xt_min; xt <= xt_max; ++xt) {
    RateSweepRow g0;
    g0.xt = xt;
    g0.construction = "genus0";
    g0.genus = 0;
    if (f.q() > 2 * xt + 1) {
      g0.L = (f.q() - 2 * xt) / 2;
      g0.N = g0.L + 2 * xt;
      g0.feasible = true;
      PirParams p;
      p.field = f;
      p.L = g0.L;
      p.N = g0.N;
      g0.r = rate(p);
    }
    rows.push_back(g0);
    for (std::size_t c = 0; c < curves.size(); ++c) {
      RateSweepRow row;
      row.xt = xt;
      row.construction = curves[c].first;
      row.genus = curves[c].second.genus();
      if (const auto sel = select_from_pool(pools[c], row.genus, xt, xt)) {
        row.feasible = true;
        row.L = sel->L;
        row.N = sel->N;
        PirParams p;
        p.field = f;
        p.curve = curves[c].second;
        p.L = sel->L;
        p.N = sel->N;
        row.r = rate(p);
      }
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace agpir
