#include "supconv/linalg.hpp"

#include "supconv/error.hpp"

#include <utility>

namespace supconv {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == m.cols(), ErrorKind::InvalidInput, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<RationalVector>& cols) {
  return from_rows(cols).transposed();
}

RationalVector Matrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector Matrix::column(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require(cols_ == rhs.rows_, ErrorKind::InvalidInput, "matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += (*this)(i, k) * rhs(k, j);
    }
  return out;
}

RationalVector Matrix::operator*(const RationalVector& v) const {
  require(cols_ == v.size(), ErrorKind::InvalidInput, "matrix-vector shape mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, ErrorKind::InvalidInput,
          "matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

Rational determinant(Matrix m) {
  require(m.rows() == m.cols(), ErrorKind::InvalidInput, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      swap_rows(m, pivot, col);
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

std::size_t rank(Matrix m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    swap_rows(m, pivot, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      const Rational factor = m(i, col) / m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(i, c) -= factor * m(r, c);
    }
    ++r;
  }
  return r;
}

std::optional<RationalVector> solve(Matrix a, RationalVector b) {
  const std::size_t n = a.rows();
  require(a.cols() == n && b.size() == n, ErrorKind::InvalidInput, "solve shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      swap_rows(a, pivot, col);
      std::swap(b[pivot], b[col]);
    }
    const Rational inv = 1 / a(col, col);
    for (std::size_t c = col; c < n; ++c) a(col, c) *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
      b[r] -= factor * b[col];
    }
  }
  return b;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  require(m.cols() == n, ErrorKind::InvalidInput, "inverse of non-square matrix");
  Matrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector e(n);
    e[j] = 1;
    auto col = solve(m, e);
    if (!col) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) out(i, j) = (*col)[i];
  }
  return out;
}

}  // namespace supconv
