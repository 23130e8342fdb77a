#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "eulercat/errors.hpp"
#include "eulercat/rational.hpp"

namespace eulercat {

using RationalVector = std::vector<Rational>;

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw DimensionMismatch("matrix entry count does not match rows*cols");
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<Rational>& entries() const { return entries_; }

  RationalMatrix transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

inline RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  RationalMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p.at(i, j) += aik * b.at(k, j);
    }
  return p;
}

inline RationalVector multiply(const RationalMatrix& m, const RationalVector& v) {
  if (m.cols() != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  RationalVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

inline RationalVector multiply(const RationalVector& v, const RationalMatrix& m) {
  if (m.rows() != v.size()) throw DimensionMismatch("vector-matrix shape mismatch");
  RationalVector out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out[j] += v[i] * m.at(i, j);
  return out;
}

// Solution of a linear system. `unique` is false when the solution space is
// positive-dimensional; the reported vector is then the canonical one with
// every free variable set to zero.
struct LinearSolution {
  RationalVector values;
  bool unique = true;
};

// Gauss-Jordan elimination with exact pivoting on the first nonzero entry per
// column. Deterministic: identical inputs give identical outputs.
inline std::optional<LinearSolution> solve_right_system(const RationalMatrix& m,
                                                        const RationalVector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("rhs length does not match row count");
  const std::size_t rows = m.rows(), cols = m.cols();

  // augmented [m | b]
  std::vector<RationalVector> a(rows, RationalVector(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.at(r, c);
    a[r][cols] = b[r];
  }

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;  // free column
    std::swap(a[sel], a[pivot_row]);
    const Rational inv_pivot = Rational(1) / a[pivot_row][col];
    for (std::size_t c = col; c <= cols; ++c) a[pivot_row][c] *= inv_pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = col; c <= cols; ++c) a[r][c] -= factor * a[pivot_row][c];
    }
    pivots.emplace_back(pivot_row, col);
    ++pivot_row;
  }

  for (std::size_t r = pivot_row; r < rows; ++r)
    if (a[r][cols] != 0) return std::nullopt;  // inconsistent

  LinearSolution sol;
  sol.values.assign(cols, Rational(0));
  for (const auto& [r, c] : pivots) sol.values[c] = a[r][cols];
  sol.unique = pivots.size() == cols;
  return sol;
}

// m·w = b, exactly; none when inconsistent.
inline std::optional<RationalVector> solve_right(const RationalMatrix& m,
                                                 const RationalVector& b) {
  auto sol = solve_right_system(m, b);
  if (!sol) return std::nullopt;
  return std::move(sol->values);
}

// v·m = b, exactly; solve_right applied to the transpose.
inline std::optional<LinearSolution> solve_left_system(const RationalMatrix& m,
                                                       const RationalVector& b) {
  return solve_right_system(m.transposed(), b);
}

inline std::optional<RationalVector> solve_left(const RationalMatrix& m,
                                                const RationalVector& b) {
  auto sol = solve_left_system(m, b);
  if (!sol) return std::nullopt;
  return std::move(sol->values);
}

// Exact inverse, or none when singular.
inline std::optional<RationalMatrix> invert(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("only square matrices can be inverted");
  const std::size_t n = m.rows();

  // augmented [m | I], reduced in place
  std::vector<RationalVector> a(n, RationalVector(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m.at(r, c);
    a[r][n + r] = 1;
  }

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = pivot_row;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) return std::nullopt;  // rank deficient
    std::swap(a[sel], a[pivot_row]);
    const Rational inv_pivot = Rational(1) / a[pivot_row][col];
    for (std::size_t c = col; c < 2 * n; ++c) a[pivot_row][c] *= inv_pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == pivot_row || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = col; c < 2 * n; ++c) a[r][c] -= factor * a[pivot_row][c];
    }
    ++pivot_row;
  }

  RationalMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = a[r][n + c];
  return out;
}

}  // namespace eulercat
