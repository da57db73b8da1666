#include "kronecker/rational_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace kronecker {

RationalMatrix::RationalMatrix(std::int64_t rows, std::int64_t cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RationalMatrix: negative dimension");
}

RationalMatrix::RationalMatrix(std::int64_t rows, std::int64_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RationalMatrix: negative dimension");
  if (data_.size() != static_cast<std::size_t>(rows * cols)) {
    throw std::invalid_argument("RationalMatrix: entry count does not match shape");
  }
}

RationalMatrix RationalMatrix::identity(std::int64_t n) {
  RationalMatrix m(n, n);
  for (std::int64_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::int64_t cols, const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(static_cast<std::int64_t>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<std::int64_t>(rows[i].size()) != cols) {
      throw std::invalid_argument("RationalMatrix::from_rows: ragged rows");
    }
    for (std::int64_t j = 0; j < cols; ++j) m(static_cast<std::int64_t>(i), j) = rows[i][static_cast<std::size_t>(j)];
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::int64_t i = 0; i < rows_; ++i) {
    for (std::int64_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RationalMatrix RationalMatrix::block(std::int64_t row0, std::int64_t col0, std::int64_t rows,
                                     std::int64_t cols) const {
  if (row0 < 0 || col0 < 0 || row0 + rows > rows_ || col0 + cols > cols_) {
    throw std::out_of_range("RationalMatrix::block: out of range");
  }
  RationalMatrix b(rows, cols);
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::int64_t j = 0; j < cols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  }
  return b;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch in product");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::int64_t i = 0; i < a.rows_; ++i) {
    for (std::int64_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::int64_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("RationalMatrix: shape mismatch in difference");
  }
  RationalMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::int64_t i = 0; i < rows_; ++i) {
    if (i > 0) os << ", ";
    os << '[';
    for (std::int64_t j = 0; j < cols_; ++j) {
      if (j > 0) os << ", ";
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Echelon rref(const RationalMatrix& m) {
  Echelon e{m, {}};
  RationalMatrix& a = e.reduced;
  std::int64_t row = 0;
  for (std::int64_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::int64_t pivot = -1;
    for (std::int64_t i = row; i < a.rows(); ++i) {
      if (sgn(a(i, col)) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (std::int64_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
    }
    const Rational inv = 1 / a(row, col);
    for (std::int64_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::int64_t i = 0; i < a.rows(); ++i) {
      if (i == row || sgn(a(i, col)) == 0) continue;
      const Rational factor = a(i, col);
      for (std::int64_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

std::int64_t rank(const RationalMatrix& m) { return static_cast<std::int64_t>(rref(m).pivot_cols.size()); }

RationalMatrix kernel_basis(const RationalMatrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::int64_t> free_cols;
  for (std::int64_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  }
  RationalMatrix basis(m.cols(), static_cast<std::int64_t>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    basis(free_cols[k], kk) = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      basis(e.pivot_cols[r], kk) = -e.reduced(static_cast<std::int64_t>(r), free_cols[k]);
    }
  }
  return basis;
}

RationalMatrix cokernel_projection(const RationalMatrix& m) {
  // Rows of P span the left kernel of m: P m = 0 and P has full row rank.
  return kernel_basis(m.transpose()).transpose();
}

RationalMatrix stack_vertical(const std::vector<RationalMatrix>& blocks, std::int64_t cols) {
  std::int64_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("stack_vertical: column mismatch");
    rows += b.rows();
  }
  RationalMatrix out(rows, cols);
  std::int64_t offset = 0;
  for (const auto& b : blocks) {
    for (std::int64_t i = 0; i < b.rows(); ++i) {
      for (std::int64_t j = 0; j < cols; ++j) out(offset + i, j) = b(i, j);
    }
    offset += b.rows();
  }
  return out;
}

RationalMatrix stack_horizontal(const std::vector<RationalMatrix>& blocks, std::int64_t rows) {
  std::int64_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("stack_horizontal: row mismatch");
    cols += b.cols();
  }
  RationalMatrix out(rows, cols);
  std::int64_t offset = 0;
  for (const auto& b : blocks) {
    for (std::int64_t i = 0; i < rows; ++i) {
      for (std::int64_t j = 0; j < b.cols(); ++j) out(i, offset + j) = b(i, j);
    }
    offset += b.cols();
  }
  return out;
}

RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::int64_t i = 0; i < a.rows(); ++i) {
    for (std::int64_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  for (std::int64_t i = 0; i < b.rows(); ++i) {
    for (std::int64_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return out;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  RationalMatrix a = m;
  Rational det = 1;
  const std::int64_t n = a.rows();
  for (std::int64_t col = 0; col < n; ++col) {
    std::int64_t pivot = -1;
    for (std::int64_t i = col; i < n; ++i) {
      if (sgn(a(i, col)) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (std::int64_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::int64_t i = col + 1; i < n; ++i) {
      if (sgn(a(i, col)) == 0) continue;
      const Rational factor = a(i, col) / a(col, col);
      for (std::int64_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
    }
  }
  return det;
}

}  // namespace kronecker
