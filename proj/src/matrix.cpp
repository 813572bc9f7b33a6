#include "pir/matrix.hpp"

#include "pir/errors.hpp"

namespace pir {

Matrix Matrix::identity(size_t n, const Field& field) {
  Matrix m(n, n, field);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Symbol> Matrix::col(size_t j) const {
  std::vector<Symbol> c(rows_);
  for (size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

size_t Matrix::rank() const {
  Matrix m = *this;
  const Field& f = *field_;
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    size_t piv = r;
    while (piv < rows_ && m.at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (size_t j = c; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Symbol ipiv = f.inv(m.at(r, c));
    for (size_t j = c; j < cols_; ++j) m.at(r, j) = f.mul(m.at(r, j), ipiv);
    for (size_t i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Symbol factor = m.at(i, c);
      for (size_t j = c; j < cols_; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    ++r;
  }
  return r;
}

std::vector<Symbol> Matrix::solve(const std::vector<Symbol>& y) const {
  if (rows_ != cols_ || y.size() != rows_) throw DimensionMismatch("solve expects a square system");
  const Field& f = *field_;
  Matrix m = *this;
  std::vector<Symbol> b = y;
  for (size_t c = 0; c < cols_; ++c) {
    size_t piv = c;
    while (piv < rows_ && m.at(piv, c) == 0) ++piv;
    if (piv == rows_) throw SingularMatrix("matrix is singular");
    if (piv != c) {
      for (size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(c, j));
      std::swap(b[piv], b[c]);
    }
    Symbol ipiv = f.inv(m.at(c, c));
    for (size_t j = 0; j < cols_; ++j) m.at(c, j) = f.mul(m.at(c, j), ipiv);
    b[c] = f.mul(b[c], ipiv);
    for (size_t i = 0; i < rows_; ++i) {
      if (i == c || m.at(i, c) == 0) continue;
      Symbol factor = m.at(i, c);
      for (size_t j = 0; j < cols_; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(c, j)));
      b[i] = f.sub(b[i], f.mul(factor, b[c]));
    }
  }
  return b;
}

std::vector<Symbol> Matrix::apply(const std::vector<Symbol>& x) const {
  if (x.size() != cols_) throw DimensionMismatch("vector length does not match columns");
  std::vector<Symbol> y(rows_, 0);
  for (size_t i = 0; i < rows_; ++i) {
    Symbol acc = 0;
    for (size_t j = 0; j < cols_; ++j) acc = field_->add(acc, field_->mul(at(i, j), x[j]));
    y[i] = acc;
  }
  return y;
}

Matrix Matrix::vstack(const Matrix& other) const {
  if (cols_ != other.cols_ || !same_field(*field_, *other.field_))
    throw DimensionMismatch("vstack shape mismatch");
  Matrix m(rows_ + other.rows_, cols_, *field_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (size_t i = 0; i < other.rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = other.at(i, j);
  return m;
}

Matrix Matrix::submatrix(const std::vector<size_t>& row_idx, const std::vector<size_t>& col_idx) const {
  Matrix m(row_idx.size(), col_idx.size(), *field_);
  for (size_t i = 0; i < row_idx.size(); ++i)
    for (size_t j = 0; j < col_idx.size(); ++j) m.at(i, j) = at(row_idx[i], col_idx[j]);
  return m;
}

Symbol dot(const Field& f, const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot length mismatch");
  Symbol acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

}  // namespace pir
