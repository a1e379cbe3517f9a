#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ramlab/error.hpp"

namespace ramlab {

// Small dense matrix over a ring whose elements carry their own context
// (field, truncation, ring spec). The matrix remembers a zero element so that
// empty products and fresh matrices stay inside the right ring.
template <class Scalar>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Scalar zero)
      : rows_(rows), cols_(cols), zero_(std::move(zero)), data_(rows * cols, zero_) {}

  static Matrix identity(std::size_t n, const Scalar& zero, const Scalar& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& zero() const { return zero_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  template <class Fn>
  auto map(Fn&& fn) const -> Matrix<decltype(fn(std::declval<const Scalar&>()))> {
    using Out = decltype(fn(std::declval<const Scalar&>()));
    Matrix<Out> out(rows_, cols_, fn(zero_));
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = fn((*this)(r, c));
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  Scalar zero_;
  std::vector<Scalar> data_;
};

template <class Scalar>
Matrix<Scalar> operator*(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::kInvalidArgument, "matrix shape mismatch in product");
  Matrix<Scalar> out(a.rows(), b.cols(), a.zero());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Scalar acc = a.zero();
      for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a(r, k) * b(k, c);
      out(r, c) = acc;
    }
  }
  return out;
}

template <class Scalar>
Matrix<Scalar> operator+(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::kInvalidArgument, "matrix shape mismatch in sum");
  Matrix<Scalar> out(a.rows(), a.cols(), a.zero());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  }
  return out;
}

template <class Scalar>
Matrix<Scalar> operator-(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::kInvalidArgument, "matrix shape mismatch in difference");
  Matrix<Scalar> out(a.rows(), a.cols(), a.zero());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  }
  return out;
}

}  // namespace ramlab
