#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace unram {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t width = 0) {
    std::size_t c = rows.empty() ? width : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t height) {
    Matrix m(height, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != height) throw std::invalid_argument("column has wrong height");
      for (std::size_t i = 0; i < height; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
      }
    return p;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<T> r(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    check_same(o);
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check_same(o);
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool operator<(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return data_ < o.data_;
  }

  bool is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  const std::vector<T>& data() const { return data_; }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);
/// Empty optional when some entry is not an integer.
std::optional<IntMatrix> to_integer(const RatMatrix& m);
std::optional<IntVector> to_integer(const RatVector& v);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
/// Inverse of a matrix with determinant ±1; throws otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);
/// Some solution of a·x = b, or empty if the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);
std::size_t rank(const RatMatrix& m);

IntVector apply(const IntMatrix& m, const IntVector& v);
RatVector apply(const IntMatrix& m, const RatVector& v);
RatVector apply(const RatMatrix& m, const RatVector& v);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);
Rational dot(const RatVector& a, const RatVector& b);

IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const Integer& c, const IntVector& v);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const Rational& c, const RatVector& v);
IntVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);
/// Least common multiple of the denominators.
Integer common_denominator(const RatVector& v);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);
std::string to_string(const IntMatrix& m);
Rational parse_rational(const std::string& text);

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const;
};
struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const;
};
struct RatVectorHash {
  std::size_t operator()(const RatVector& v) const;
};

}  // namespace unram
