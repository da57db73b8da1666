#include <gtest/gtest.h>

#include <thread>

#include "kronecker/chebyshev.hpp"
#include "kronecker/cluster.hpp"

using namespace kronecker;

namespace {

// Exponent windows whose expansions stay small enough for a unit test.
struct Window {
  std::int64_t b, lo, hi;
};
constexpr Window kWindows[] = {{2, -12, 15}, {3, -5, 8}, {4, -4, 7}, {5, -3, 6}};

Rational evaluate_at(const LaurentPoly& p, const Rational& a, const Rational& c) {
  Rational total = 0;
  for (const auto& t : p.terms()) {
    const Rational ua = t.exp.e1 > 0 ? a : Rational(1 / a);
    const Rational uc = t.exp.e2 > 0 ? c : Rational(1 / c);
    Rational term = t.coeff;
    for (std::int64_t i = 0; i < std::abs(t.exp.e1); ++i) term *= ua;
    for (std::int64_t i = 0; i < std::abs(t.exp.e2); ++i) term *= uc;
    total += term;
  }
  return total;
}

Rational power(const Rational& x, std::int64_t k) {
  Rational out = 1;
  for (std::int64_t i = 0; i < k; ++i) out *= x;
  return out;
}

}  // namespace

TEST(Mutation, Rank2FlipsSign) { EXPECT_EQ(mutate_matrix(ExchangeMatrix::rank2(3), 1), ExchangeMatrix::rank2(-3)); }

TEST(Mutation, ThreeByThree) {
  const ExchangeMatrix b(3, {0, 1, 0, -1, 0, 1, 0, -1, 0});
  const ExchangeMatrix mutated = mutate_matrix(b, 2);
  EXPECT_EQ(mutated, ExchangeMatrix(3, {0, -1, 1, 1, 0, -1, -1, 1, 0}));
}

TEST(Mutation, InvolutionAndSkewSymmetry) {
  const ExchangeMatrix b(4, {0, 2, -1, 3, -2, 0, 4, -1, 1, -4, 0, 2, -3, 1, -2, 0});
  for (int k = 1; k <= 4; ++k) {
    const ExchangeMatrix once = mutate_matrix(b, k);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) EXPECT_EQ(once(i, j), -once(j, i));
    }
    EXPECT_EQ(mutate_matrix(once, k), b);
  }
}

TEST(Mutation, Errors) {
  EXPECT_THROW(mutate_matrix(ExchangeMatrix::rank2(2), 0), IndexOutOfRange);
  EXPECT_THROW(mutate_matrix(ExchangeMatrix::rank2(2), 3), IndexOutOfRange);
  EXPECT_THROW(ExchangeMatrix(2, {0, 1, 1, 0}), std::invalid_argument);
}

TEST(Mutation, CartanCounterpart) {
  EXPECT_EQ(ExchangeMatrix::rank2(3).cartan_counterpart(), (std::vector<std::int64_t>{2, -3, -3, 2}));
}

TEST(ClusterVar, Examples) {
  EXPECT_EQ(cluster_var(2, 3), (LaurentPoly::x2(2) + LaurentPoly(1)) * LaurentPoly::x1(-1));
  EXPECT_EQ(cluster_var(1, 4), (LaurentPoly::x1() + LaurentPoly::x2() + LaurentPoly(1)).shifted({-1, -1}));
  // Two exchange steps unrolled by hand.
  const LaurentPoly numerator = (LaurentPoly::x2(3) + LaurentPoly(1)).pow(3) + LaurentPoly::x1(3);
  EXPECT_EQ(cluster_var(3, 4), numerator.shifted({-3, -1}));
  EXPECT_EQ(cluster_var(4, 1), LaurentPoly::x1());
  EXPECT_EQ(cluster_var(4, 2), LaurentPoly::x2());
}

TEST(ClusterVar, B1IsPeriodic) {
  ClusterContext ctx(1);
  for (std::int64_t m = -10; m <= 10; ++m) EXPECT_EQ(ctx.cluster_var(m + 5), ctx.cluster_var(m)) << m;
}

TEST(ClusterVar, AgreesWithRationalRecursion) {
  // Evaluate at rational points and run the exchange relation in Q directly.
  const Rational a(2, 3);
  const Rational c(5, 7);
  for (const auto& w : kWindows) {
    ClusterContext ctx(w.b);
    std::map<std::int64_t, Rational> values{{1, a}, {2, c}};
    for (std::int64_t m = 3; m <= w.hi; ++m) values[m] = (power(values[m - 1], w.b) + 1) / values[m - 2];
    for (std::int64_t m = 0; m >= w.lo; --m) values[m] = (power(values[m + 1], w.b) + 1) / values[m + 2];
    for (std::int64_t m = w.lo; m <= w.hi; ++m) {
      EXPECT_EQ(evaluate_at(ctx.cluster_var(m), a, c), values[m]) << "b=" << w.b << " m=" << m;
    }
  }
}

TEST(ClusterVar, DenominatorsMatchAlpha) {
  for (const auto& w : kWindows) {
    ClusterContext ctx(w.b);
    for (std::int64_t m = w.lo; m <= w.hi; ++m) {
      if (m == 1 || m == 2) continue;
      EXPECT_EQ(denominator_vector(ctx.cluster_var(m)), alpha(w.b, m)) << "b=" << w.b << " m=" << m;
    }
  }
}

TEST(ClusterVar, PositivityB2) {
  ClusterContext ctx(2);
  for (std::int64_t m = -12; m <= 15; ++m) EXPECT_TRUE(is_positive(ctx.cluster_var(m))) << m;
}

TEST(ClusterVar, PositivityEvidenceLargerB) {
  for (const auto& w : kWindows) {
    if (w.b == 2) continue;
    ClusterContext ctx(w.b);
    for (std::int64_t m = w.lo; m <= w.hi; ++m) {
      if (!is_positive(ctx.cluster_var(m))) ADD_FAILURE() << "non-positive coefficient at b=" << w.b << " m=" << m;
    }
  }
}

TEST(ClusterVar, SwapSymmetry) {
  for (const auto& w : kWindows) {
    ClusterContext ctx(w.b);
    for (std::int64_t m = std::max(w.lo, 3 - w.hi); m <= std::min(w.hi, 3 - w.lo); ++m) {
      EXPECT_EQ(ctx.cluster_var(m).swap_variables(), ctx.cluster_var(3 - m)) << "b=" << w.b << " m=" << m;
    }
  }
}

TEST(ClusterVar, ExchangeIdentity) {
  for (const auto& w : kWindows) {
    ClusterContext ctx(w.b);
    for (std::int64_t m = w.lo + 1; m < w.hi; ++m) {
      EXPECT_EQ(ctx.cluster_var(m - 1) * ctx.cluster_var(m + 1),
                ctx.cluster_var(m).pow(static_cast<unsigned>(w.b)) + LaurentPoly(1))
          << "b=" << w.b << " m=" << m;
    }
  }
}

TEST(ClusterContext, CacheIsTransparent) {
  ClusterContext warm(3);
  for (std::int64_t m = -5; m <= 8; ++m) warm.cluster_var(m);
  EXPECT_GT(warm.cached_count(), 0u);
  for (std::int64_t m = 8; m >= -5; --m) EXPECT_EQ(warm.cluster_var(m), ClusterContext(3).cluster_var(m)) << m;
  const ClusterContext copy(warm);
  EXPECT_EQ(copy.cached_count(), warm.cached_count());
  EXPECT_EQ(copy.cluster_var(7), warm.cluster_var(7));
}

TEST(ClusterContext, ConcurrentReaders) {
  const ClusterContext shared(2);
  std::vector<LaurentPoly> reference;
  for (std::int64_t m = -10; m <= 13; ++m) reference.push_back(cluster_var(2, m));
  std::vector<std::thread> threads;
  std::vector<int> mismatches(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      for (int round = 0; round < 3; ++round) {
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(reference.size()); ++i) {
          // Threads walk the range in different orders so extensions interleave.
          const std::int64_t k = (t % 2 == 0) ? i : static_cast<std::int64_t>(reference.size()) - 1 - i;
          if (shared.cluster_var(k - 10) != reference[static_cast<std::size_t>(k)]) ++mismatches[static_cast<std::size_t>(t)];
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int count : mismatches) EXPECT_EQ(count, 0);
}

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha(2, -1), (DimVector{1, 2}));
  for (std::int64_t b = 1; b <= 6; ++b) EXPECT_EQ(alpha(b, 3), (DimVector{1, 0}));
  EXPECT_EQ(alpha(3, 5), (DimVector{8, 3}));
  EXPECT_THROW(alpha(2, 1), InitialClusterIndex);
  EXPECT_THROW(alpha(2, 2), InitialClusterIndex);
}

TEST(Alpha, ChebyshevPattern) {
  for (std::int64_t b = 2; b <= 6; ++b) {
    for (std::int64_t n = 0; n <= 12; ++n) {
      const DimVector up = alpha(b, n + 3);
      EXPECT_EQ(up.d1, cheb_s_value(n, b));
      EXPECT_EQ(up.d2, cheb_s_value(n - 1, b));
      const DimVector down = alpha(b, -n);
      EXPECT_EQ(down.d1, cheb_s_value(n - 1, b));
      EXPECT_EQ(down.d2, cheb_s_value(n, b));
    }
  }
}

TEST(Reflect, Examples) {
  EXPECT_EQ(reflect({1, 0}, Reflection::s1, 2), (DimVector{-1, 0}));
  EXPECT_EQ(reflect(reflect({0, 1}, Reflection::s1, 2), Reflection::sigma, 2), alpha(2, -1));
  EXPECT_EQ(reflect({1, 0}, Reflection::s2, 2), alpha(2, -1));
}

TEST(Reflect, WeylOrbitOfAlpha) {
  for (std::int64_t b = 2; b <= 5; ++b) {
    for (std::int64_t n = 0; n <= 10; ++n) {
      EXPECT_EQ(reflect(alpha(b, -n), Reflection::s1, b), alpha(b, n + 4));
      EXPECT_EQ(reflect(alpha(b, n + 4), Reflection::sigma, b), alpha(b, -n - 1));
      EXPECT_EQ(reflect(alpha(b, n + 3), Reflection::s2, b), alpha(b, -n - 1));
    }
  }
}
