#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cdet/errors.hpp"
#include "cdet/laurent_poly.hpp"
#include "cdet/rational.hpp"
#include "cdet/subset.hpp"

namespace cdet {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transpose() const {
    if (data_.empty()) return Matrix(cols_, rows_, T{});
    Matrix t(cols_, rows_, data_.front());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<LaurentPoly>;
using RationalMatrix = Matrix<Rational>;

/// Ring operations the determinant routines need beyond +, -, *.
template <class T>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Rational one_like(const Rational&) { return Rational(1); }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct RingTraits<LaurentPoly> {
  static LaurentPoly zero_like(const LaurentPoly& x) { return LaurentPoly(x.num_vars()); }
  static LaurentPoly one_like(const LaurentPoly& x) { return LaurentPoly::constant(x.num_vars(), Rational(1)); }
  static bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
  static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    auto q = a.divide_exact(b);
    if (!q) throw InternalError("fraction-free step produced a non-exact division");
    return std::move(*q);
  }
};

/// Submatrix on the given 1-based row and column index sets, in sorted
/// order. A_J = minor(A, [M], J) and A^I = minor(A, I, [N]).
template <class T>
Matrix<T> minor(const Matrix<T>& m, const SubsetIdx& rows, const SubsetIdx& cols) {
  for (int r : rows.elements())
    if (r < 1 || static_cast<std::size_t>(r) > m.rows()) throw UsageError("row index " + std::to_string(r) + " out of range");
  for (int c : cols.elements())
    if (c < 1 || static_cast<std::size_t>(c) > m.cols()) throw UsageError("column index " + std::to_string(c) + " out of range");
  if (rows.empty() || cols.empty()) return Matrix<T>(rows.size(), cols.size(), T{});
  Matrix<T> out(rows.size(), cols.size(), m(0, 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(i, j) = m(rows.elements()[i] - 1, cols.elements()[j] - 1);
  return out;
}

/// All columns, selected rows.
template <class T>
Matrix<T> row_minor(const Matrix<T>& m, const SubsetIdx& rows) {
  return minor(m, rows, SubsetIdx::full(static_cast<int>(m.cols())));
}

/// All rows, selected columns.
template <class T>
Matrix<T> col_minor(const Matrix<T>& m, const SubsetIdx& cols) {
  return minor(m, SubsetIdx::full(static_cast<int>(m.rows())), cols);
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw UsageError("matrix product shape mismatch");
  if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0) throw UsageError("empty matrix product");
  const T zero = RingTraits<T>::zero_like(a(0, 0));
  Matrix<T> c(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      T acc = zero;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (RingTraits<T>::is_zero(a(i, k)) || RingTraits<T>::is_zero(b(k, j))) continue;
        acc += a(i, k) * b(k, j);
      }
      c(i, j) = std::move(acc);
    }
  return c;
}

/// Exact evaluation of every entry at a point.
RationalMatrix eval_matrix(const PolyMatrix& m, std::span<const Rational> point);

}  // namespace cdet
