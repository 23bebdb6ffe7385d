#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qsing {

using Rational = mpq_class;
using Integer = mpz_class;

// Dense exact rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  bool operator==(const Matrix& other) const;

  bool is_zero() const;
  bool is_integral() const;

  std::size_t rank() const;
  // Columns form a basis of the right kernel, scaled to primitive integer vectors.
  Matrix nullspace() const;
  // Rows form a basis of the left kernel {y : y M = 0}, primitive integer rows.
  Matrix left_nullspace() const;
  Rational determinant() const;
  std::optional<Matrix> inverse() const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace qsing
