#include "ramlab/fp_linalg.hpp"

#include <utility>

#include "ramlab/error.hpp"

namespace ramlab {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
  if (p < 2) throw Error(ErrorCode::kInvalidArgument, "F_p matrix needs p >= 2");
}

std::vector<std::size_t> row_reduce(FpMatrix& m) {
  const std::uint64_t p = m.characteristic();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t found = row;
    while (found < m.rows() && m(found, col) == 0) ++found;
    if (found == m.rows()) continue;
    if (found != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(found, c), m(row, c));
    }
    const std::uint64_t inv = inverse_mod(m(row, col), m.characteristic());
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = static_cast<std::uint32_t>(m(row, c) * inv % p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const std::uint64_t factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) = static_cast<std::uint32_t>((m(r, c) + (p - factor) * m(row, c)) % p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(FpMatrix m) { return row_reduce(m).size(); }

std::vector<FpVector> kernel_basis(FpMatrix m) {
  const std::vector<std::size_t> pivots = row_reduce(m);
  const std::uint32_t p = m.characteristic();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    FpVector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - m(r, free)) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<FpVector> independent_subset(const std::vector<FpVector>& vectors, std::uint32_t p) {
  std::vector<FpVector> chosen;
  if (vectors.empty()) return chosen;
  const std::size_t n = vectors.front().size();
  for (const auto& v : vectors) {
    FpMatrix m(chosen.size() + 1, n, p);
    for (std::size_t r = 0; r < chosen.size(); ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = chosen[r][c];
    }
    for (std::size_t c = 0; c < n; ++c) m(chosen.size(), c) = v[c] % p;
    if (rank(m) == chosen.size() + 1) chosen.push_back(v);
  }
  return chosen;
}

}  // namespace ramlab
