#pragma once

#include "supconv/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace supconv {

/// Dense row-major rational matrix. Small sizes only (k+1 <= 7 rows in
/// practice), so no attempt is made at cache friendliness.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<RationalVector>& rows);
  static Matrix from_columns(const std::vector<RationalVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;

  Matrix operator*(const Matrix& rhs) const;
  RationalVector operator*(const RationalVector& v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix scaled(const Rational& s) const;
  Matrix transposed() const;

  bool operator==(const Matrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational determinant(Matrix m);
std::size_t rank(Matrix m);

/// Unique solution of a square system, or nullopt when singular.
std::optional<RationalVector> solve(Matrix a, RationalVector b);
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace supconv
