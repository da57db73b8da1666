#include <gtest/gtest.h>

#include <set>
#include <thread>

#include "kronecker/canonical.hpp"
#include "kronecker/chebyshev.hpp"
#include "kronecker/cluster.hpp"

using namespace kronecker;

namespace {

LaurentPoly poly(std::initializer_list<std::tuple<long, std::int64_t, std::int64_t>> terms) {
  std::vector<Term> out;
  for (const auto& [c, e1, e2] : terms) out.push_back({{e1, e2}, c});
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly horner(const std::vector<Integer>& coeffs, const LaurentPoly& t) {
  LaurentPoly out;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * t + LaurentPoly(*it);
  return out;
}

}  // namespace

TEST(XClosedForm, Examples) {
  EXPECT_EQ(x_closed_form(3), poly({{1, -1, 2}, {1, -1, 0}}));
  EXPECT_EQ(x_closed_form(0), poly({{1, 2, -1}, {1, 0, -1}}));
  EXPECT_EQ(x_closed_form(-1), poly({{1, 3, -2}, {2, 1, -2}, {1, -1, 0}, {1, -1, -2}}));
  EXPECT_THROW(x_closed_form(1), InitialClusterIndex);
  EXPECT_THROW(x_closed_form(2), InitialClusterIndex);
}

TEST(XClosedForm, MatchesRecursion) {
  ClusterContext ctx(2);
  for (std::int64_t m = -25; m <= 28; ++m) {
    if (m == 1 || m == 2) continue;
    EXPECT_EQ(x_closed_form(m), ctx.cluster_var(m)) << m;
    EXPECT_TRUE(is_positive(x_closed_form(m))) << m;
  }
}

TEST(SElem, Examples) {
  EXPECT_EQ(s_elem(0), LaurentPoly(1));
  EXPECT_EQ(s_elem(1), poly({{1, 1, -1}, {1, -1, 1}, {1, -1, -1}}));
  EXPECT_THROW(s_elem(-1), std::invalid_argument);
}

TEST(SElem, DegreeTwoTable) {
  // z1^2 - 1 expanded by hand from z1 = x1/x2 + x2/x1 + 1/(x1 x2).
  const LaurentPoly expected = poly({{1, 2, -2}, {1, -2, 2}, {1, -2, -2}, {2, 0, -2}, {2, -2, 0}, {1, 0, 0}});
  EXPECT_EQ(s_elem(2), expected);
  // The middle coefficient x1^2 x2^2 of the numerator is binom(1,1) binom(1,1).
  EXPECT_EQ(s_elem(2).coefficient({0, 0}), 1);
}

TEST(SElem, NewtonPolygonIsTriangle) {
  EXPECT_EQ(newton_support(s_elem(2)), (std::vector<Exponent>{{-2, -2}, {2, -2}, {-2, 2}}));
  for (std::int64_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(newton_support(s_elem(n)), (std::vector<Exponent>{{-n, -n}, {n, -n}, {-n, n}})) << n;
  }
}

TEST(SElem, Recursion) {
  const LaurentPoly z = z1();
  for (std::int64_t n = 1; n <= 40; ++n) EXPECT_EQ(s_elem(n + 1), z * s_elem(n) - s_elem(n - 1)) << n;
}

TEST(SElem, IsChebyshevS) {
  const LaurentPoly z = z1();
  for (std::int64_t n = 0; n <= 25; ++n) {
    EXPECT_EQ(s_elem(n), horner(cheb_s_coeffs(n), z)) << n;
    EXPECT_TRUE(is_positive(s_elem(n))) << n;
  }
}

TEST(ZElem, Examples) {
  EXPECT_EQ(z_elem(1), z1());
  EXPECT_EQ(z_elem(1), s_elem(1));
  EXPECT_EQ(z_elem(2), poly({{1, 2, -2}, {1, -2, 2}, {2, 0, -2}, {2, -2, 0}, {1, -2, -2}}));
  EXPECT_EQ(z_elem(2), z1() * z1() - LaurentPoly(2));
  EXPECT_EQ(z_elem(3), evaluate_univariate(cheb_p_coeffs(3), z1()));
  EXPECT_THROW(z_elem(0), std::invalid_argument);
}

TEST(ZElem, Identities) {
  const LaurentPoly z = z1();
  for (std::int64_t n = 1; n <= 25; ++n) {
    EXPECT_EQ(z_elem(n), horner(cheb_p_coeffs(n), z)) << n;
    if (n >= 2) {
      EXPECT_EQ(z_elem(n), s_elem(n) - s_elem(n - 2)) << n;
    }
    EXPECT_TRUE(is_positive(z_elem(n))) << n;
  }
}

TEST(ZElem, ExchangeDifference) {
  EXPECT_EQ(z1(), cluster_var(2, 0) * cluster_var(2, 3) - LaurentPoly::x1() * LaurentPoly::x2());
}

TEST(FBridge, Specializations) {
  ClusterContext ctx(2);
  for (std::int64_t n = 0; n <= 10; ++n) {
    const int big = static_cast<int>(2 * n + 1);
    EXPECT_EQ(f_poly_specialized(big, 0), ctx.cluster_var(-n).shifted({n, n + 1})) << n;
    EXPECT_EQ(f_poly_specialized(big, 1), ctx.cluster_var(n + 3).shifted({n + 1, n})) << n;
    EXPECT_EQ(f_poly_specialized(big + 1, 0), s_elem(n + 1).shifted({n + 1, n + 1})) << n;
  }
}

TEST(BasisElement, Examples) {
  EXPECT_EQ(basis_element(ClusterMonomial{1, 2, 1}), poly({{1, 2, 1}}));
  EXPECT_EQ(basis_element(ClusterMonomial{3, 1, 0}), cluster_var(2, 3));
  EXPECT_EQ(basis_element(ZElement{1}), z1());
  EXPECT_EQ(basis_element(ClusterMonomial{-2, 2, 3}), cluster_var(2, -2).pow(2) * cluster_var(2, -1).pow(3));
  EXPECT_THROW(basis_element(ClusterMonomial{0, -1, 0}), std::invalid_argument);
  EXPECT_THROW(basis_element(ZElement{0}), std::invalid_argument);
}

TEST(BasisElement, CanonicalTags) {
  EXPECT_EQ(canonical_tag(ClusterMonomial{3, 0, 2}), BasisTagValue(ClusterMonomial{4, 2, 0}));
  EXPECT_EQ(canonical_tag(ClusterMonomial{-7, 0, 0}), BasisTagValue(ClusterMonomial{1, 0, 0}));
  EXPECT_EQ(canonical_tag(ClusterMonomial{3, 1, 1}), BasisTagValue(ClusterMonomial{3, 1, 1}));
  EXPECT_EQ(canonical_tag(ZElement{4}), BasisTagValue(ZElement{4}));
  for (std::int64_t m = -3; m <= 4; ++m) {
    for (std::int64_t q = 0; q <= 2; ++q) {
      const BasisTagValue tag = ClusterMonomial{m, 0, q};
      EXPECT_EQ(basis_element(canonical_tag(tag)), basis_element(tag));
    }
  }
}

TEST(BasisElement, LazyValueIsShared) {
  const BasisElement e(ClusterMonomial{-3, 1, 2});
  const BasisElement copy = e;
  std::vector<std::thread> threads;
  std::vector<const LaurentPoly*> seen(6, nullptr);
  for (std::size_t i = 0; i < seen.size(); ++i) {
    threads.emplace_back([&, i] { seen[i] = &(i % 2 ? copy : e).value(); });
  }
  for (auto& t : threads) t.join();
  for (const auto* p : seen) EXPECT_EQ(p, seen[0]);
  EXPECT_EQ(*seen[0], basis_element(e.tag()));
}

TEST(ListBasis, MatchesBruteForceEnumeration) {
  for (std::int64_t bound = 0; bound <= 3; ++bound) {
    std::set<ClusterMonomial> expected_monomials;
    std::set<ZElement> expected_z;
    auto in_box = [&](const LaurentPoly& p) {
      const DimVector d = denominator_vector(p);
      return std::abs(d.d1) <= bound && std::abs(d.d2) <= bound;
    };
    for (std::int64_t m = -bound - 3; m <= bound + 5; ++m) {
      for (std::int64_t p = 0; p <= bound + 1; ++p) {
        for (std::int64_t q = 0; q <= bound + 1; ++q) {
          const BasisTagValue tag = ClusterMonomial{m, p, q};
          if (in_box(basis_element(tag))) expected_monomials.insert(std::get<ClusterMonomial>(canonical_tag(tag)));
        }
      }
    }
    for (std::int64_t n = 1; n <= bound + 2; ++n) {
      if (in_box(z_elem(n))) expected_z.insert(ZElement{n});
    }

    const auto listed = list_basis(bound);
    std::vector<BasisTagValue> expected(expected_monomials.begin(), expected_monomials.end());
    expected.insert(expected.end(), expected_z.begin(), expected_z.end());
    ASSERT_EQ(listed.size(), expected.size()) << bound;
    std::set<std::string> values;
    for (std::size_t i = 0; i < listed.size(); ++i) {
      EXPECT_EQ(listed[i].tag(), expected[i]) << describe(expected[i]);
      EXPECT_TRUE(is_positive(listed[i].value()));
      values.insert(listed[i].value().to_string());
    }
    EXPECT_EQ(values.size(), listed.size()) << "duplicate values at bound " << bound;
  }
}
