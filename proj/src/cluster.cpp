#include "kronecker/cluster.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

#include "kronecker/chebyshev.hpp"

namespace kronecker {

namespace {

std::int64_t to_int64(const Integer& v, const char* what) {
  if (!v.fits_slong_p()) throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
  return v.get_si();
}

std::int64_t sgn(std::int64_t v) { return (v > 0) - (v < 0); }

}  // namespace

ExchangeMatrix::ExchangeMatrix(int n, std::vector<std::int64_t> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n <= 0) throw std::invalid_argument("ExchangeMatrix: size must be positive");
  if (entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("ExchangeMatrix: expected n*n entries");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((*this)(i, j) != -(*this)(j, i)) {
        throw std::invalid_argument("ExchangeMatrix: matrix is not skew-symmetric");
      }
    }
  }
}

ExchangeMatrix ExchangeMatrix::rank2(std::int64_t b) { return ExchangeMatrix(2, {0, b, -b, 0}); }

std::vector<std::int64_t> ExchangeMatrix::cartan_counterpart() const {
  std::vector<std::int64_t> a(entries_.size());
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const std::int64_t bij = (*this)(i, j);
      a[static_cast<std::size_t>(i * n_ + j)] = i == j ? 2 : -(bij < 0 ? -bij : bij);
    }
  }
  return a;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& matrix, int k) {
  const int n = matrix.size();
  if (k < 1 || k > n) {
    throw IndexOutOfRange("mutate_matrix: direction " + std::to_string(k) + " outside [1, " +
                          std::to_string(n) + "]");
  }
  const int kk = k - 1;
  std::vector<std::int64_t> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::int64_t bij = matrix(i, j);
      std::int64_t value;
      if (i == kk || j == kk) {
        value = -bij;
      } else {
        const std::int64_t prod = matrix(i, kk) * matrix(kk, j);
        value = bij + sgn(matrix(i, kk)) * (prod > 0 ? prod : 0);
      }
      out[static_cast<std::size_t>(i * n + j)] = value;
    }
  }
  return ExchangeMatrix(n, std::move(out));
}

ClusterContext::ClusterContext(std::int64_t b) : b_(b) {
  if (b < 1) throw std::invalid_argument("ClusterContext: b must be positive");
  cache_.emplace(1, LaurentPoly::x1());
  cache_.emplace(2, LaurentPoly::x2());
}

ClusterContext::ClusterContext(const ClusterContext& other) : b_(other.b_) {
  std::shared_lock lock(other.mutex_);
  cache_ = other.cache_;
}

std::size_t ClusterContext::cached_count() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

LaurentPoly ClusterContext::cluster_var(std::int64_t m) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(m); it != cache_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  const auto exponent = static_cast<unsigned>(b_);
  // The cache always holds a contiguous window of indices around {1, 2}.
  try {
    for (std::int64_t hi = cache_.rbegin()->first; hi < m; ++hi) {
      const LaurentPoly& cur = cache_.at(hi);
      const LaurentPoly& prev = cache_.at(hi - 1);
      cache_.emplace(hi + 1, div_exact(cur.pow(exponent) + LaurentPoly(1), prev));
    }
    for (std::int64_t lo = cache_.begin()->first; lo > m; --lo) {
      const LaurentPoly& cur = cache_.at(lo);
      const LaurentPoly& next = cache_.at(lo + 1);
      cache_.emplace(lo - 1, div_exact(cur.pow(exponent) + LaurentPoly(1), next));
    }
  } catch (const NotDivisible& e) {
    throw NotDivisible("Laurent phenomenon violated while computing x_" + std::to_string(m) +
                       " for b = " + std::to_string(b_) + ": " + e.what());
  }
  return cache_.at(m);
}

LaurentPoly cluster_var(std::int64_t b, std::int64_t m) { return ClusterContext(b).cluster_var(m); }

DimVector alpha(std::int64_t b, std::int64_t m) {
  if (m == 1 || m == 2) {
    throw InitialClusterIndex("alpha: x_" + std::to_string(m) + " belongs to the initial cluster");
  }
  const Integer bb(static_cast<long>(b));
  if (m >= 3) {
    return {to_int64(cheb_s_value(m - 3, bb), "alpha"), to_int64(cheb_s_value(m - 4, bb), "alpha")};
  }
  return {to_int64(cheb_s_value(-m - 1, bb), "alpha"), to_int64(cheb_s_value(-m, bb), "alpha")};
}

DimVector reflect(DimVector v, Reflection which, std::int64_t b) {
  switch (which) {
    case Reflection::s1:
      return {-v.d1 + b * v.d2, v.d2};
    case Reflection::s2:
      return {v.d1, b * v.d1 - v.d2};
    case Reflection::sigma:
      return {v.d2, v.d1};
  }
  throw std::invalid_argument("reflect: unknown reflection");
}

}  // namespace kronecker
