#include "qsing/rational_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qsing {

namespace {

// Reduced row echelon form in place, pivoting only in the first cols columns
// while row operations span the whole row (augmented blocks follow along).
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][c];
    const std::size_t width = a[row].size();
    for (std::size_t j = c; j < width; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < width; ++j) {
        if (sgn(a[row][j]) != 0) a[i][j] -= f * a[row][j];
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

// Scales a rational vector to a primitive integer vector.
void make_primitive(std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  Integer g = 0;
  for (auto& x : v) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

Matrix kernel_columns(const Matrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  const auto pivots = rref(a, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][f];
    make_primitive(v);
    basis.push_back(std::move(v));
  }
  Matrix out(m.cols(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) out(i, j) = basis[j][i];
  return out;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (sgn(o(k, j)) != 0) p(i, j) += x * o(k, j);
      }
    }
  return p;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::is_integral() const {
  for (const auto& x : data_)
    if (x.get_den() != 1) return false;
  return true;
}

// Fraction-free elimination on an integer copy; rows are kept primitive to
// limit coefficient growth.
std::size_t Matrix::rank() const {
  std::vector<std::vector<Integer>> a;
  a.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer l = 1;
    bool nonzero = false;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& x = (*this)(i, j);
      if (sgn(x) != 0) {
        nonzero = true;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
      }
    }
    if (!nonzero) continue;
    std::vector<Integer> row(cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& x = (*this)(i, j);
      if (sgn(x) != 0) row[j] = x.get_num() * (l / x.get_den());
    }
    a.push_back(std::move(row));
  }
  std::size_t rank = 0;
  Integer g, f1, f2;
  for (std::size_t c = 0; c < cols_ && rank < a.size(); ++c) {
    std::size_t p = a.size();
    for (std::size_t i = rank; i < a.size(); ++i) {
      if (sgn(a[i][c]) != 0 && (p == a.size() || abs(a[i][c]) < abs(a[p][c]))) p = i;
    }
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    const auto& piv = a[rank];
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (sgn(a[i][c]) == 0) continue;
      mpz_gcd(g.get_mpz_t(), piv[c].get_mpz_t(), a[i][c].get_mpz_t());
      f1 = piv[c] / g;
      f2 = a[i][c] / g;
      Integer content = 0;
      for (std::size_t j = c; j < cols_; ++j) {
        if (sgn(a[i][j]) == 0 && sgn(piv[j]) == 0) continue;
        a[i][j] = a[i][j] * f1 - piv[j] * f2;
        if (content != 1) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), a[i][j].get_mpz_t());
      }
      if (content > 1) {
        for (std::size_t j = c; j < cols_; ++j)
          if (sgn(a[i][j]) != 0) mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), content.get_mpz_t());
      }
    }
    ++rank;
  }
  return rank;
}

Matrix Matrix::nullspace() const { return kernel_columns(*this); }

Matrix Matrix::left_nullspace() const { return kernel_columns(transpose()).transpose(); }

Rational Matrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  std::vector<std::vector<Rational>> a(rows_, std::vector<Rational>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) a[i][j] = (*this)(i, j);
  Rational det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t p = c;
    while (p < rows_ && sgn(a[p][c]) == 0) ++p;
    if (p == rows_) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < cols_; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = (*this)(i, j);
    a[i][n + i] = 1;
  }
  const auto pivots = rref(a, n);
  if (pivots.size() != n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a[i][n + j];
  return inv;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace qsing
