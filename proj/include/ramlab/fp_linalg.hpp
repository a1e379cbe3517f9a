#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ramlab {

// Dense matrix over the prime field F_p, row-major, entries in [0, p).
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t characteristic() const { return p_; }

  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

using FpVector = std::vector<std::uint32_t>;

// Brings m to reduced row echelon form in place and returns the pivot columns.
std::vector<std::size_t> row_reduce(FpMatrix& m);

std::size_t rank(FpMatrix m);

// Basis of {v : m v = 0}, one vector of length m.cols() per free column.
std::vector<FpVector> kernel_basis(FpMatrix m);

// Maximal linearly independent subset of the given vectors, in input order.
std::vector<FpVector> independent_subset(const std::vector<FpVector>& vectors, std::uint32_t p);

}  // namespace ramlab
