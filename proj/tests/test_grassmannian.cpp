#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "kronecker/canonical.hpp"
#include "kronecker/chebyshev.hpp"
#include "kronecker/cluster.hpp"
#include "kronecker/grassmannian.hpp"

using namespace kronecker;

namespace {

constexpr RepKind kKinds[] = {RepKind::preprojective, RepKind::preinjective, RepKind::regular};

void choose(int n, int k, int next, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  for (int i = next; i < n; ++i) {
    current.push_back(i);
    choose(n, k, i + 1, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> choose(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  choose(n, k, 0, current, out);
  return out;
}

// Counts coordinate subrepresentations directly from the matrices: every
// column of every map restricted to N1 must vanish outside N2.
std::int64_t naive_coordinate_count(const QuiverRep& m, DimVector e) {
  std::int64_t count = 0;
  for (const auto& n1 : choose(static_cast<int>(m.d1()), static_cast<int>(e.d1))) {
    for (const auto& n2 : choose(static_cast<int>(m.d2()), static_cast<int>(e.d2))) {
      std::vector<bool> in_n2(static_cast<std::size_t>(m.d2()), false);
      for (int i : n2) in_n2[static_cast<std::size_t>(i)] = true;
      bool closed = true;
      for (const auto& phi : m.maps()) {
        for (int j : n1) {
          for (std::int64_t i = 0; i < m.d2(); ++i) closed = closed && (phi(i, j) == 0 || in_n2[static_cast<std::size_t>(i)]);
        }
      }
      if (closed) ++count;
    }
  }
  return count;
}

// Subspaces of F_2^d as sets of vectors (bitmasks), by closure under addition.
std::vector<std::vector<unsigned>> f2_subspaces(int d, int dim) {
  std::vector<std::vector<unsigned>> out;
  const unsigned size = 1u << d;
  for (std::uint64_t chosen = 0; chosen < (std::uint64_t{1} << size); ++chosen) {
    if (!(chosen & 1)) continue;
    bool closed = true;
    std::vector<unsigned> members;
    for (unsigned v = 0; v < size; ++v) {
      if (chosen >> v & 1) members.push_back(v);
    }
    for (unsigned a : members) {
      for (unsigned c : members) closed = closed && (chosen >> (a ^ c) & 1);
    }
    if (closed && members.size() == (1u << dim)) out.push_back(members);
  }
  return out;
}

unsigned apply_f2(const RationalMatrix& phi, unsigned v) {
  unsigned out = 0;
  for (std::int64_t i = 0; i < phi.rows(); ++i) {
    int bit = 0;
    for (std::int64_t j = 0; j < phi.cols(); ++j) {
      if (v >> j & 1) bit ^= phi(i, j) == 0 ? 0 : 1;
    }
    out |= static_cast<unsigned>(bit) << i;
  }
  return out;
}

std::int64_t naive_f2_count(const QuiverRep& m, DimVector e) {
  std::int64_t count = 0;
  const auto sub1 = f2_subspaces(static_cast<int>(m.d1()), static_cast<int>(e.d1));
  const auto sub2 = f2_subspaces(static_cast<int>(m.d2()), static_cast<int>(e.d2));
  for (const auto& n1 : sub1) {
    for (const auto& n2 : sub2) {
      bool closed = true;
      for (const auto& phi : m.maps()) {
        for (unsigned v : n1) closed = closed && std::find(n2.begin(), n2.end(), apply_f2(phi, v)) != n2.end();
      }
      if (closed) ++count;
    }
  }
  return count;
}

// Number of k-dimensional subspaces of F_q^n.
Integer gaussian_binomial(int n, int k, int q) {
  if (k < 0 || k > n) return 0;
  Integer num = 1;
  Integer den = 1;
  for (int i = 0; i < k; ++i) {
    Integer a = 1;
    Integer c = 1;
    for (int j = 0; j < n - i; ++j) a *= q;
    for (int j = 0; j < i + 1; ++j) c *= q;
    num *= a - 1;
    den *= c - 1;
  }
  return num / den;
}

LaurentPoly z_poly(std::initializer_list<std::tuple<long, std::int64_t, std::int64_t>> terms) {
  std::vector<Term> out;
  for (const auto& [c, e1, e2] : terms) out.push_back({{e1, e2}, c});
  return LaurentPoly::from_terms(std::move(out));
}

}  // namespace

TEST(ChiGrassmannian, Examples) {
  EXPECT_EQ(chi_grassmannian(4, 2), 6);
  for (int d = 0; d <= 6; ++d) EXPECT_EQ(chi_grassmannian(d, 0), 1);
  EXPECT_EQ(chi_grassmannian(3, 5), 0);
}

TEST(ChiZ, Examples) {
  EXPECT_EQ(chi_z_closed(RepKind::preprojective, 1, 0, 1), 1);
  EXPECT_EQ(chi_z_closed(RepKind::preprojective, 1, 2, 0), 1);
  EXPECT_EQ(chi_z_closed(RepKind::regular, 2, 0, 1), 1);
  EXPECT_EQ(chi_z_cellcount(RepKind::preprojective, 2, 0, 1), 0);
  EXPECT_EQ(chi_z_closed(RepKind::preprojective, 2, 0, 1), 0);
  EXPECT_EQ(chi_z_cellcount(RepKind::regular, 1, 0, 1), 1);
  EXPECT_THROW(chi_z_closed(RepKind::preinjective, 1, 0, 0), std::invalid_argument);
}

TEST(ChiZ, ClosedFormMatchesCellCount) {
  for (RepKind kind : {RepKind::preprojective, RepKind::regular}) {
    for (int n = 0; n <= 12; ++n) {
      const DimVector d = kind_dimension(kind, n);
      for (int p = 0; p <= d.d2; ++p) {
        for (int r = 0; r <= d.d1; ++r) {
          EXPECT_EQ(chi_z_closed(kind, n, p, r), chi_z_cellcount(kind, n, p, r))
              << to_string(kind) << " n=" << n << " p=" << p << " r=" << r;
        }
      }
    }
  }
}

TEST(ChiE, Examples) {
  EXPECT_EQ(chi_e_assembled(RepKind::preprojective, 1, {0, 1}), 2);
  for (RepKind kind : kKinds) EXPECT_EQ(chi_e_assembled(kind, 3, {0, 0}), 1);
  EXPECT_EQ(chi_e_assembled(RepKind::preprojective, 1, {1, 1}), 0);
  EXPECT_EQ(chi_e_coordinate_oracle(build_preprojective_explicit(1), {0, 1}), 2);
  EXPECT_EQ(chi_e_coordinate_oracle(build_regular_explicit(1), {1, 1}), 1);
  for (RepKind kind : kKinds) {
    const QuiverRep m = explicit_rep(kind, 4);
    EXPECT_EQ(chi_e_coordinate_oracle(m, m.dim()), 1);
  }
}

TEST(ChiE, OracleMatchesNaiveCoordinateCount) {
  for (RepKind kind : kKinds) {
    for (int n = 0; n <= 5; ++n) {
      const QuiverRep m = explicit_rep(kind, n);
      for (std::int64_t e1 = 0; e1 <= m.d1(); ++e1) {
        for (std::int64_t e2 = 0; e2 <= m.d2(); ++e2) {
          EXPECT_EQ(chi_e_coordinate_oracle(m, {e1, e2}), naive_coordinate_count(m, {e1, e2}))
              << to_string(kind) << " n=" << n << " e=(" << e1 << "," << e2 << ")";
        }
      }
    }
  }
}

TEST(ChiE, ThreeRoutesAgree) {
  for (RepKind kind : kKinds) {
    for (int n = 0; n <= 10; ++n) {
      const ChiTable closed = chi_table(kind, n, ChiRoute::closed_form);
      const ChiTable cells = chi_table(kind, n, ChiRoute::cell_count);
      const ChiTable oracle = chi_table(kind, n, ChiRoute::coordinate_oracle);
      EXPECT_TRUE(closed.same_values(cells)) << to_string(kind) << " " << n;
      EXPECT_TRUE(closed.same_values(oracle)) << to_string(kind) << " " << n;
      EXPECT_EQ(closed.at({0, 0}), 1);
      EXPECT_EQ(closed.at(closed.dim), 1);
      EXPECT_EQ(closed.at({-1, 0}), 0);
      EXPECT_EQ(closed.at({closed.dim.d1 + 1, 0}), 0);
    }
  }
}

TEST(ChiE, OracleErrors) {
  EXPECT_THROW(chi_e_coordinate_oracle(build_preprojective_explicit(1).without_tag(), {0, 1}), UnsupportedRep);
  EXPECT_THROW(chi_e_coordinate_oracle(build_preprojective_explicit(13), {0, 1}), SizeLimit);
}

TEST(PPoly, Examples) {
  EXPECT_EQ(p_poly(RepKind::preprojective, 0), z_poly({{1, 1, 0}, {1, 0, 0}}));
  EXPECT_EQ(p_poly(RepKind::preprojective, 1), z_poly({{1, 2, 0}, {2, 1, 0}, {1, 0, 0}, {1, 0, 1}}));
}

TEST(PPoly, DualitySwapsVariables) {
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(p_poly(RepKind::preinjective, n), p_poly(RepKind::preprojective, n).swap_variables()) << n;
  }
}

TEST(PPoly, ShiftedFormsAgree) {
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(p_poly_z_shift(RepKind::preprojective, n), p_poly(RepKind::preprojective, n)) << n;
    EXPECT_EQ(p_poly_z_shift(RepKind::regular, n), p_poly(RepKind::regular, n)) << n;
    EXPECT_EQ(p_poly_zprime_shift_preprojective(n), p_poly(RepKind::preprojective, n)) << n;
  }
}

TEST(XPoly, Examples) {
  EXPECT_EQ(x_poly(RepKind::preinjective, 0), cluster_var(2, 3));
  EXPECT_EQ(x_poly(RepKind::preprojective, 1), cluster_var(2, -1));
  EXPECT_EQ(x_poly(RepKind::regular, 1), z1());
}

TEST(XPoly, ClusterVariableBridge) {
  ClusterContext ctx(2);
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(x_poly(RepKind::preprojective, n), ctx.cluster_var(-n)) << n;
    EXPECT_EQ(x_poly(RepKind::preinjective, n), ctx.cluster_var(n + 3)) << n;
    EXPECT_EQ(x_poly(RepKind::regular, n), s_elem(n)) << n;
  }
}

TEST(XPoly, DenominatorIsDimension) {
  for (RepKind kind : kKinds) {
    for (int n = 0; n <= 10; ++n) {
      EXPECT_EQ(denominator_vector(x_poly(kind, n)), kind_dimension(kind, n)) << to_string(kind) << " " << n;
    }
  }
}

TEST(ChiTableSmall, LargerBClusterVariables) {
  for (int b = 2; b <= 5; ++b) {
    ClusterContext ctx(b);
    for (std::int64_t m : {0, -1, 3, 4}) {
      const ChiTable table = chi_table_small(build_M(b, m));
      EXPECT_EQ(x_poly(table), ctx.cluster_var(m)) << "b=" << b << " m=" << m;
    }
  }
}

TEST(ChiTableSmall, AgreesWithFamilies) {
  for (RepKind kind : kKinds) {
    for (int n = 0; n <= 1; ++n) {
      EXPECT_TRUE(chi_table_small(explicit_rep(kind, n)).same_values(chi_table(kind, n, ChiRoute::closed_form)));
    }
  }
  EXPECT_THROW(chi_table_small(build_preprojective_explicit(2)), UnsupportedRep);
}

TEST(TPlusIdentity, HoldsAndControlFails) {
  for (int n = 0; n <= 5; ++n) {
    EXPECT_TRUE(verify_tplus_identity(n)) << n;
    EXPECT_FALSE(verify_tplus_identity(n, true)) << n;
  }
}

TEST(TPlusIdentity, RejectsUnrelatedPolynomials) {
  const LaurentPoly p_s2 = p_poly(RepKind::preprojective, 0);
  EXPECT_TRUE(tplus_identity_holds(p_s2, {0, 1}, p_poly(RepKind::preprojective, 1), 2));
  EXPECT_FALSE(tplus_identity_holds(p_s2, {0, 1}, p_poly(RepKind::preprojective, 2), 2));
  EXPECT_FALSE(tplus_identity_holds(p_poly(RepKind::preprojective, 1), {1, 2}, p_s2, 2));
}

TEST(SubrepFq, Examples) {
  const QuiverRep p1 = build_preprojective_explicit(1);
  EXPECT_EQ(subrep_count_fq(p1, {0, 0}, 2), 1);
  EXPECT_EQ(subrep_count_fq(p1, p1.dim(), 3), 1);
  EXPECT_EQ(subrep_count_fq(p1, {0, 1}, 2), 3);
  EXPECT_EQ(subrep_count_fq(p1, {0, 1}, 3), 4);
  EXPECT_EQ(subrep_count_fq(p1, {0, 1}, 4), 5);
  EXPECT_THROW(subrep_count_fq(p1, {0, 1}, 5), std::invalid_argument);
  EXPECT_THROW(subrep_count_fq(build_preprojective_explicit(4), {0, 1}, 2), SizeLimit);
}

TEST(SubrepFq, ZeroMapsGiveGaussianBinomials) {
  for (int q : {2, 3, 4}) {
    for (int d1 = 0; d1 <= 3; ++d1) {
      for (int d2 = 0; d2 <= 3; ++d2) {
        std::vector<RationalMatrix> maps(2, RationalMatrix(d2, d1));
        const QuiverRep m(2, d1, d2, maps);
        for (int e1 = 0; e1 <= d1; ++e1) {
          for (int e2 = 0; e2 <= d2; ++e2) {
            EXPECT_EQ(subrep_count_fq(m, {e1, e2}, q), gaussian_binomial(d1, e1, q) * gaussian_binomial(d2, e2, q));
          }
        }
      }
    }
  }
}

TEST(SubrepFq, MatchesNaiveF2Enumeration) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const int b = 2 + trial % 2;
    const auto d1 = static_cast<std::int64_t>(rng() % 4);
    const auto d2 = static_cast<std::int64_t>(rng() % 4);
    std::vector<RationalMatrix> maps;
    for (int k = 0; k < b; ++k) {
      RationalMatrix phi(d2, d1);
      for (std::int64_t i = 0; i < d2; ++i) {
        for (std::int64_t j = 0; j < d1; ++j) phi(i, j) = static_cast<long>(rng() % 2);
      }
      maps.push_back(phi);
    }
    const QuiverRep m(b, d1, d2, maps);
    for (std::int64_t e1 = 0; e1 <= d1; ++e1) {
      for (std::int64_t e2 = 0; e2 <= d2; ++e2) {
        EXPECT_EQ(subrep_count_fq(m, {e1, e2}, 2), naive_f2_count(m, {e1, e2})) << m.to_string();
      }
    }
  }
}

TEST(Parsing, KindsAndRoutes) {
  EXPECT_EQ(parse_rep_kind("preproj"), RepKind::preprojective);
  EXPECT_EQ(parse_rep_kind("preinjective"), RepKind::preinjective);
  EXPECT_EQ(parse_rep_kind("regular"), RepKind::regular);
  EXPECT_EQ(parse_chi_route("cells"), ChiRoute::cell_count);
  EXPECT_THROW(parse_rep_kind("tubular"), std::invalid_argument);
  EXPECT_THROW(parse_chi_route("guess"), std::invalid_argument);
}
