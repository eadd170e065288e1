#include "agpir/matrix.hpp"

namespace agpir {

Matrix Matrix::from_rows(const std::vector<std::vector<FieldElem>>& rows) {
  Matrix m;
  if (rows.empty()) return m;
  m.rows_ = rows.size();
  m.cols_ = rows[0].size();
  m.a_.reserve(m.rows_ * m.cols_);
  for (const auto& r : rows) {
    if (r.size() != m.cols_) throw Error("matrix: ragged row list");
    m.a_.insert(m.a_.end(), r.begin(), r.end());
  }
  return m;
}

std::vector<FieldElem> Matrix::row_vec(std::size_t r) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void Matrix::append_row(const std::vector<FieldElem>& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw Error("matrix: row length mismatch");
  a_.insert(a_.end(), v.begin(), v.end());
  ++rows_;
}

namespace {

// In-place forward elimination; returns the pivot columns.
std::vector<std::size_t> eliminate(const Field& f, Matrix& m, bool reduce_up) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    }
    const FieldElem inv = f.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    const std::size_t start = reduce_up ? 0 : r + 1;
    for (std::size_t i = start; i < m.rows(); ++i) {
      if (i == r) continue;
      const FieldElem factor = m.at(i, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) {
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t mat_rank(const Field& f, Matrix a) { return eliminate(f, a, false).size(); }

Matrix mat_rref(const Field& f, Matrix a) {
  eliminate(f, a, true);
  return a;
}

std::optional<Matrix> mat_inverse(const Field& f, const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto pivots = eliminate(f, aug, true);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  }
  return inv;
}

Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix: dimension mismatch in product");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElem aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        r.at(i, j) = f.add(r.at(i, j), f.mul(aik, b.at(k, j)));
      }
    }
  }
  return r;
}

std::vector<FieldElem> mat_vec(const Field& f, const Matrix& a, const std::vector<FieldElem>& v) {
  if (a.cols() != v.size()) throw Error("matrix: dimension mismatch in matrix-vector product");
  std::vector<FieldElem> r(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    FieldElem acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc = f.add(acc, f.mul(a.at(i, j), v[j]));
    r[i] = acc;
  }
  return r;
}

std::optional<std::vector<FieldElem>> mat_solve(const Field& f, const Matrix& a,
                                                const std::vector<FieldElem>& b) {
  if (a.rows() != b.size()) throw Error("matrix: right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const auto pivots = eliminate(f, aug, true);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // 0 = 1 row
  std::vector<FieldElem> x(a.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
  return x;
}

Matrix row_basis(const Field& f, const Matrix& a) {
  Matrix r = mat_rref(f, a);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    bool any = false;
    for (std::size_t j = 0; j < r.cols(); ++j) {
      if (r.at(i, j) != 0) {
        any = true;
        break;
      }
    }
    if (any) ++nonzero;
  }
  Matrix out(nonzero, r.cols());
  for (std::size_t i = 0; i < nonzero; ++i) {
    for (std::size_t j = 0; j < r.cols(); ++j) out.at(i, j) = r.at(i, j);
  }
  return out;
}

bool row_space_contains(const Field& f, const Matrix& a, const std::vector<FieldElem>& v) {
  Matrix m = a;
  const std::size_t base = mat_rank(f, m);
  m.append_row(v);
  return mat_rank(f, m) == base;
}

bool row_space_contains_all(const Field& f, const Matrix& a, const Matrix& b) {
  Matrix stacked = a;
  for (std::size_t i = 0; i < b.rows(); ++i) stacked.append_row(b.row_vec(i));
  return mat_rank(f, stacked) == mat_rank(f, a);
}

bool row_space_equal(const Field& f, const Matrix& a, const Matrix& b) {
  return row_space_contains_all(f, a, b) && row_space_contains_all(f, b, a);
}

Matrix null_space(const Field& f, const Matrix& a) {
  Matrix r = a;
  const std::vector<std::size_t> pivots = eliminate(f, r, true);
  std::vector<bool> is_pivot(a.cols(), false);
  for (const std::size_t c : pivots) is_pivot[c] = true;
  Matrix out(a.cols() - pivots.size(), a.cols());
  std::size_t k = 0;
  for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    out.at(k, free_col) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      out.at(k, pivots[i]) = f.neg(r.at(i, free_col));
    }
    ++k;
  }
  return out;
}

std::size_t rank_of_columns(const Field& f, const Matrix& a, const std::vector<std::size_t>& cols) {
  Matrix sub(a.rows(), cols.size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) sub.at(i, j) = a.at(i, cols[j]);
  }
  return mat_rank(f, std::move(sub));
}

bool RankTracker::try_add(std::vector<FieldElem> v) {
  if (v.size() != cols_) throw Error("matrix: row length mismatch");
  for (std::size_t i = 0; i < reduced_.size(); ++i) {
    const FieldElem c = v[pivots_[i]];
    if (c == 0) continue;
    const auto& r = reduced_[i];
    for (std::size_t j = 0; j < cols_; ++j) v[j] = f_->sub(v[j], f_->mul(c, r[j]));
  }
  std::size_t pivot = cols_;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j] != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot == cols_) return false;
  const FieldElem inv = f_->inv(v[pivot]);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = f_->mul(v[j], inv);
  reduced_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace agpir
