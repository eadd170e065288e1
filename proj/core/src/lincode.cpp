#include "agpir/lincode.hpp"

#include <algorithm>
#include <thread>

namespace agpir {

namespace {

constexpr std::uint64_t kMinDistanceGuard = std::uint64_t{1} << 26;
constexpr std::uint64_t kSubsetGuard = std::uint64_t{1} << 24;

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t factor = n - k + i;
    if (r > ~std::uint64_t{0} / factor) throw GuardError("binomial: uint64 overflow");
    r = r * factor / i;
  }
  return r;
}

LinearCode code_from_rows(const Field& f, Matrix rows, std::vector<EvalPoint> points) {
  if (rows.cols() != points.size()) throw Error("lincode: generator width != point count");
  const std::size_t rank = mat_rank(f, rows);
  if (rank != rows.rows()) {
    throw Error("lincode: evaluation rows are dependent (rank " + std::to_string(rank) + " of " +
                std::to_string(rows.rows()) + ")");
  }
  LinearCode code;
  code.n = rows.cols();
  code.k = rows.rows();
  code.gen = std::move(rows);
  code.points = std::move(points);
  return code;
}

LinearCode code_from_functions(const HyperellipticCurve& curve,
                               const std::vector<FuncElem>& functions,
                               const std::vector<CurvePoint>& points) {
  Matrix rows(functions.size(), points.size());
  for (std::size_t i = 0; i < functions.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      rows.at(i, j) = ff_eval(curve, functions[i], points[j]);
    }
  }
  std::vector<EvalPoint> pts;
  pts.reserve(points.size());
  for (const CurvePoint& p : points) {
    if (p.at_infinity) throw Error("lincode: the point at infinity is not an evaluation point");
    pts.push_back(EvalPoint::on_curve(p));
  }
  return code_from_rows(curve.field(), std::move(rows), std::move(pts));
}

LinearCode code_from_polys(const Field& f, const std::vector<Poly>& polys,
                           const std::vector<FieldElem>& alphas) {
  Matrix rows(polys.size(), alphas.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = 0; j < alphas.size(); ++j) {
      rows.at(i, j) = poly_eval(f, polys[i], alphas[j]);
    }
  }
  std::vector<EvalPoint> pts;
  pts.reserve(alphas.size());
  for (const FieldElem a : alphas) pts.push_back(EvalPoint::line(a));
  return code_from_rows(f, std::move(rows), std::move(pts));
}

namespace {

// Minimum weight over codewords whose last message digit is fixed; the other
// k-1 digits run through an odometer, updating the codeword incrementally.
int min_weight_slice(const Field& f, const LinearCode& code, FieldElem last_digit) {
  const std::size_t n = code.n;
  const std::size_t k = code.k;
  const std::uint32_t q = f.q();

  std::vector<FieldElem> cw(n, 0);
  if (last_digit != 0) {
    for (std::size_t j = 0; j < n; ++j) cw[j] = f.mul(last_digit, code.gen.at(k - 1, j));
  }
  auto weight = [&]() {
    int w = 0;
    for (std::size_t j = 0; j < n; ++j) w += cw[j] != 0;
    return w;
  };

  int best = static_cast<int>(n) + 1;
  if (last_digit != 0) best = std::min(best, weight());
  if (k == 1) return best;

  std::vector<FieldElem> digits(k - 1, 0);
  while (true) {
    std::size_t i = 0;
    for (; i < k - 1; ++i) {
      const FieldElem old = digits[i];
      digits[i] = (old + 1 == q) ? 0 : old + 1;
      const FieldElem delta = f.sub(digits[i], old);
      for (std::size_t j = 0; j < n; ++j) {
        cw[j] = f.add(cw[j], f.mul(delta, code.gen.at(i, j)));
      }
      if (digits[i] != 0) break;
    }
    if (i == k - 1) break;  // odometer wrapped: slice done
    best = std::min(best, weight());
  }
  return best;
}

}  // namespace

int min_distance(const Field& f, const LinearCode& code, int threads) {
  if (code.k == 0) throw Error("lincode: minimum distance of the zero code is undefined");
  long double words = 1.0L;
  for (std::size_t i = 0; i < code.k; ++i) words *= f.q();
  if (words > static_cast<long double>(kMinDistanceGuard)) {
    throw GuardError("min_distance: q^k exceeds the 2^26 enumeration guard");
  }

  const std::uint32_t q = f.q();
  std::vector<int> slice_best(q, static_cast<int>(code.n) + 1);
  if (threads <= 1 || q < 2) {
    for (std::uint32_t v = 0; v < q; ++v) slice_best[v] = min_weight_slice(f, code, v);
  } else {
    const unsigned nt = std::min<unsigned>(static_cast<unsigned>(threads), q);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < nt; ++t) {
      workers.emplace_back([&, t]() {
        for (std::uint32_t v = t; v < q; v += nt) slice_best[v] = min_weight_slice(f, code, v);
      });
    }
    for (auto& w : workers) w.join();
  }
  int best = static_cast<int>(code.n) + 1;
  for (const int w : slice_best) best = std::min(best, w);
  return best;
}

namespace {

// Lexicographic enumeration of all size-u index subsets of {lo..n-1}.
// fn returning false stops the walk; the return value mirrors that.
template <typename Fn>
bool for_each_subset(std::size_t lo, std::size_t n, std::size_t u, Fn&& fn) {
  if (lo + u > n) return true;
  std::vector<std::size_t> idx(u);
  for (std::size_t i = 0; i < u; ++i) idx[i] = lo + i;
  while (true) {
    if (!fn(idx)) return false;
    bool advanced = false;
    std::size_t i = u;
    while (i-- > 0) {
      if (idx[i] != n - u + i) {
        ++idx[i];
        for (std::size_t j = i + 1; j < u; ++j) idx[j] = idx[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return true;
  }
}

}  // namespace

int dual_distance(const Field& f, const LinearCode& code) {
  // d-perp = smallest U with some U dependent columns; U = k+1 always works.
  std::uint64_t enumerated = 0;
  for (std::size_t u = 1; u <= code.k + 1; ++u) {
    if (u > code.n) break;
    enumerated += binomial(code.n, u);
    if (enumerated > (kSubsetGuard << 2)) {
      throw GuardError("dual_distance: subset search exceeds the enumeration guard");
    }
    if (u == code.k + 1) return static_cast<int>(u);  // rank can be at most k
    bool dependent_found = false;
    for_each_subset(0, code.n, u, [&](const std::vector<std::size_t>& idx) {
      if (rank_of_columns(f, code.gen, idx) < u) {
        dependent_found = true;
        return false;
      }
      return true;
    });
    if (dependent_found) return static_cast<int>(u);
  }
  throw Error("dual_distance: internal search failure");
}

LinearCode dual_code(const Field& f, const LinearCode& code) {
  Matrix basis = null_space(f, code.gen);
  return code_from_rows(f, std::move(basis), code.points);
}

LinearCode star_product(const Field& f, const LinearCode& c1, const LinearCode& c2) {
  if (c1.n != c2.n || c1.points != c2.points) {
    throw Error("lincode: star product needs matching point lists");
  }
  Matrix products(c1.k * c2.k, c1.n);
  std::size_t r = 0;
  for (std::size_t i = 0; i < c1.k; ++i) {
    for (std::size_t j = 0; j < c2.k; ++j, ++r) {
      for (std::size_t t = 0; t < c1.n; ++t) {
        products.at(r, t) = f.mul(c1.gen.at(i, t), c2.gen.at(j, t));
      }
    }
  }
  Matrix basis = row_basis(f, products);
  return code_from_rows(f, std::move(basis), c1.points);
}

std::vector<std::size_t> information_set(const Field& f, const Matrix& gen, std::size_t size) {
  if (size > gen.cols()) throw Error("lincode: information set larger than the code length");
  RankTracker tracker(f, gen.rows());
  std::vector<std::size_t> chosen;
  for (std::size_t c = 0; c < gen.cols() && chosen.size() < size; ++c) {
    std::vector<FieldElem> column(gen.rows());
    for (std::size_t i = 0; i < gen.rows(); ++i) column[i] = gen.at(i, c);
    if (tracker.try_add(std::move(column))) chosen.push_back(c);
  }
  if (chosen.size() < size) {
    throw Error("lincode: no information set of size " + std::to_string(size) +
                " (column rank " + std::to_string(chosen.size()) + ")");
  }
  return chosen;
}

std::vector<std::size_t> information_set(const Field& f, const LinearCode& code,
                                         std::size_t size) {
  return information_set(f, code.gen, size);
}

SigmaPoint sigma_profile(const Field& f, const LinearCode& noise_code, std::size_t u,
                         int threads) {
  SigmaPoint point;
  point.u = u;
  point.total = binomial(noise_code.n, u);
  if (point.total > kSubsetGuard) {
    throw GuardError("sigma_profile: C(n, U) exceeds the 2^24 enumeration guard");
  }
  if (u == 0 || point.total == 0) return point;
  if (u > noise_code.k) {
    point.insecure = point.total;  // projection rank <= k < U on every subset
    return point;
  }

  const std::size_t n = noise_code.n;
  // Partition the subset walk by smallest member; counts combine additively.
  auto count_first = [&](std::size_t first) {
    std::uint64_t insecure = 0;
    std::vector<std::size_t> idx(u);
    idx[0] = first;
    for_each_subset(first + 1, n, u - 1, [&](const std::vector<std::size_t>& rest) {
      std::copy(rest.begin(), rest.end(), idx.begin() + 1);
      if (rank_of_columns(f, noise_code.gen, idx) < u) ++insecure;
      return true;
    });
    return insecure;
  };

  const std::size_t first_max = n - u + 1;
  std::vector<std::uint64_t> per_first(first_max, 0);
  if (threads <= 1) {
    for (std::size_t s = 0; s < first_max; ++s) per_first[s] = count_first(s);
  } else {
    const unsigned nt = std::min<unsigned>(static_cast<unsigned>(threads),
                                           static_cast<unsigned>(first_max));
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < nt; ++t) {
      workers.emplace_back([&, t]() {
        for (std::size_t s = t; s < first_max; s += nt) per_first[s] = count_first(s);
      });
    }
    for (auto& w : workers) w.join();
  }
  for (const std::uint64_t c : per_first) point.insecure += c;
  return point;
}

}  // namespace agpir
