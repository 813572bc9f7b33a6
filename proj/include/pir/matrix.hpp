#pragma once

#include <cstddef>
#include <vector>

#include "pir/field.hpp"

namespace pir {

/// Dense row-major matrix over a Field. The field must outlive the matrix;
/// the shared Field::of() instances satisfy this.
class Matrix {
 public:
  Matrix(size_t rows, size_t cols, const Field& field)
      : rows_(rows), cols_(cols), a_(rows * cols, 0), field_(&field) {}

  static Matrix identity(size_t n, const Field& field);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Field& field() const { return *field_; }

  Symbol& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  Symbol at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Symbol> row(size_t i) const {
    return std::vector<Symbol>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  std::vector<Symbol> col(size_t j) const;

  /// Row rank by Gaussian elimination; rank of the zero matrix is 0.
  size_t rank() const;

  /// Solves a*x = y for square invertible a; throws SingularMatrix otherwise.
  std::vector<Symbol> solve(const std::vector<Symbol>& y) const;

  bool invertible() const { return rows_ == cols_ && rank() == rows_; }

  /// y = m * x (x a column vector of length cols).
  std::vector<Symbol> apply(const std::vector<Symbol>& x) const;

  /// Stacks rows of both matrices (same column count and field).
  Matrix vstack(const Matrix& other) const;

  Matrix submatrix(const std::vector<size_t>& row_idx, const std::vector<size_t>& col_idx) const;

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ && same_field(*field_, *o.field_);
  }

 private:
  size_t rows_, cols_;
  std::vector<Symbol> a_;
  const Field* field_;
};

/// Inner product of two equal-length vectors over the field.
Symbol dot(const Field& f, const std::vector<Symbol>& a, const std::vector<Symbol>& b);

}  // namespace pir
