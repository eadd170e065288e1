#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "agpir/field.hpp"

namespace agpir {

// Dense row-major matrix over F_q. All elimination routines pivot on the
// first nonzero entry in column order, so results are deterministic.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix from_rows(const std::vector<std::vector<FieldElem>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  FieldElem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  const FieldElem* row(std::size_t r) const { return a_.data() + r * cols_; }
  FieldElem* row(std::size_t r) { return a_.data() + r * cols_; }

  std::vector<FieldElem> row_vec(std::size_t r) const;
  void append_row(const std::vector<FieldElem>& v);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElem> a_;
};

std::size_t mat_rank(const Field& f, Matrix a);
Matrix mat_rref(const Field& f, Matrix a);
std::optional<Matrix> mat_inverse(const Field& f, const Matrix& a);
Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b);
std::vector<FieldElem> mat_vec(const Field& f, const Matrix& a, const std::vector<FieldElem>& v);

// Solves A x = b exactly (A may be tall); nullopt when inconsistent.
std::optional<std::vector<FieldElem>> mat_solve(const Field& f, const Matrix& a,
                                                const std::vector<FieldElem>& b);

// Row-space basis (the nonzero rows of the reduced row echelon form).
Matrix row_basis(const Field& f, const Matrix& a);
bool row_space_contains(const Field& f, const Matrix& a, const std::vector<FieldElem>& v);
bool row_space_contains_all(const Field& f, const Matrix& a, const Matrix& b);
bool row_space_equal(const Field& f, const Matrix& a, const Matrix& b);

// Basis rows of the right kernel {x : A x = 0}.
Matrix null_space(const Field& f, const Matrix& a);

std::size_t rank_of_columns(const Field& f, const Matrix& a, const std::vector<std::size_t>& cols);

// Incremental Gaussian elimination, used for greedy basis extension.
class RankTracker {
 public:
  explicit RankTracker(const Field& f, std::size_t cols) : f_(&f), cols_(cols) {}

  // Adds the row if it is independent from the rows seen so far.
  bool try_add(std::vector<FieldElem> v);
  std::size_t rank() const { return reduced_.size(); }

 private:
  const Field* f_;
  std::size_t cols_;
  std::vector<std::vector<FieldElem>> reduced_;  // echelonized rows
  std::vector<std::size_t> pivots_;
};

}  // namespace agpir
