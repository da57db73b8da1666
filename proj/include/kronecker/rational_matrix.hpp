#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kronecker/laurent.hpp"

namespace kronecker {

/// Dense matrix over Q. Zero-sized dimensions are allowed (a 3x0 matrix is
/// the map from the zero space).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::int64_t rows, std::int64_t cols);
  RationalMatrix(std::int64_t rows, std::int64_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::int64_t n);
  /// Builds from integer rows; all rows must have equal length.
  static RationalMatrix from_rows(std::int64_t cols, const std::vector<std::vector<long>>& rows);

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }

  Rational& operator()(std::int64_t i, std::int64_t j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Rational& operator()(std::int64_t i, std::int64_t j) const {
    return data_[static_cast<std::size_t>(i * cols_ + j)];
  }

  RationalMatrix transpose() const;
  RationalMatrix block(std::int64_t row0, std::int64_t col0, std::int64_t rows, std::int64_t cols) const;
  bool is_zero() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  std::string to_string() const;

 private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Row-reduced echelon form. Pivots are chosen column by column (first
/// column with a nonzero entry at or below the current row, then the first
/// such row), so results are reproducible.
struct Echelon {
  RationalMatrix reduced;
  std::vector<std::int64_t> pivot_cols;
};

Echelon rref(const RationalMatrix& m);
std::int64_t rank(const RationalMatrix& m);

/// Columns form a basis of {v : m v = 0}; shape cols x nullity. Basis vector
/// k has a 1 in the k-th free column and zeros in the other free columns.
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Surjection P of shape (rows - rank) x rows whose kernel is the column span
/// of m, i.e. the projection onto coker(m).
RationalMatrix cokernel_projection(const RationalMatrix& m);

/// Vertical and horizontal concatenation.
RationalMatrix stack_vertical(const std::vector<RationalMatrix>& blocks, std::int64_t cols);
RationalMatrix stack_horizontal(const std::vector<RationalMatrix>& blocks, std::int64_t rows);
RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b);

Rational determinant(const RationalMatrix& m);

}  // namespace kronecker
