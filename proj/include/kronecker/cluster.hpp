#pragma once

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <vector>

#include "kronecker/laurent.hpp"

namespace kronecker {

/// Skew-symmetric integer exchange matrix.
class ExchangeMatrix {
 public:
  /// Row-major entries; throws std::invalid_argument unless n*n entries
  /// forming a skew-symmetric matrix.
  ExchangeMatrix(int n, std::vector<std::int64_t> entries);

  /// [[0, b], [-b, 0]].
  static ExchangeMatrix rank2(std::int64_t b);

  int size() const { return n_; }
  std::int64_t operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  /// Symmetric matrix with 2 on the diagonal and -|b_ij| elsewhere.
  std::vector<std::int64_t> cartan_counterpart() const;

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

 private:
  int n_;
  std::vector<std::int64_t> entries_;
};

/// Matrix mutation in direction k (1-based). Throws IndexOutOfRange.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& matrix, int k);

/// The rank-2 cluster algebra with exchange relations x_{m-1} x_{m+1} = x_m^b + 1,
/// expanded in the initial cluster {x1, x2}.
///
/// Computed variables are cached. The cache is shared between threads:
/// lookups take a shared lock, extension an exclusive one.
class ClusterContext {
 public:
  explicit ClusterContext(std::int64_t b);

  ClusterContext(const ClusterContext& other);
  ClusterContext& operator=(const ClusterContext&) = delete;

  std::int64_t b() const { return b_; }

  /// x_m for any integer m. Each recursion step is one div_exact; a
  /// NotDivisible would contradict the Laurent phenomenon and is rethrown.
  LaurentPoly cluster_var(std::int64_t m) const;

  std::size_t cached_count() const;

 private:
  std::int64_t b_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::int64_t, LaurentPoly> cache_;
};

/// Convenience wrapper with a fresh context.
LaurentPoly cluster_var(std::int64_t b, std::int64_t m);

/// Denominator vector of x_m predicted by the Chebyshev recursion:
/// (S_{m-3}(b), S_{m-4}(b)) for m >= 3, (S_{-m-1}(b), S_{-m}(b)) for m <= 0.
/// Throws InitialClusterIndex for m in {1, 2}.
DimVector alpha(std::int64_t b, std::int64_t m);

enum class Reflection { s1, s2, sigma };

/// Simple reflections s1 = [[-1, b], [0, 1]], s2 = [[1, 0], [b, -1]] and the
/// component swap sigma.
DimVector reflect(DimVector v, Reflection which, std::int64_t b);

}  // namespace kronecker
