#include "kronecker/grassmannian.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

#include "kronecker/chebyshev.hpp"

namespace kronecker {

namespace {

// Next integer with the same popcount (Gosper); masks are enumerated in
// increasing order.
std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

template <typename F>
void for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t x = (std::uint64_t{1} << k) - 1; x < limit; x = next_combination(x)) f(x);
}

void require_family(RepKind kind, const char* where) {
  if (kind == RepKind::preinjective) {
    throw std::invalid_argument(std::string(where) + ": Z_{p,r} is defined here for preprojective and regular kinds");
  }
}

template <typename ZFn>
Integer assemble(RepKind kind, int n, DimVector e, ZFn&& z) {
  const DimVector d = kind_dimension(kind, n);
  if (e.d1 < 0 || e.d2 < 0 || e.d1 > d.d1 || e.d2 > d.d2) return 0;
  if (kind == RepKind::preinjective) {
    const DimVector m = kind_dimension(RepKind::preprojective, n);
    return assemble(RepKind::preprojective, n, {m.d1 - e.d2, m.d2 - e.d1}, z);
  }
  Integer total = 0;
  for (std::int64_t p = 0; p <= d.d2; ++p) {
    const Integer ways = binom(p, e.d2 - d.d2 + p);
    if (ways == 0) continue;
    total += ways * z(kind, n, static_cast<int>(p), static_cast<int>(e.d1));
  }
  return total;
}

ChiTable make_table(DimVector d, int b, ChiRoute route) {
  ChiTable t;
  t.dim = d;
  t.b = b;
  t.provenance = route;
  return t;
}

// Arithmetic in F_q for q in {2, 3, 4}; elements are 0..q-1. For q = 4 the
// element 2 is a root of t^2 + t + 1 and 3 = 2 + 1.
struct SmallField {
  int q;
  int add(int a, int b) const { return q == 4 ? (a ^ b) : (a + b) % q; }
  int mul(int a, int b) const {
    if (q != 4) return (a * b) % q;
    static constexpr int table[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    return table[a][b];
  }
  int characteristic() const { return q == 4 ? 2 : q; }
};

using Vec = std::vector<int>;

int encode(const Vec& v, int q) {
  int code = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) code = code * q + *it;
  return code;
}

// All k-dimensional subspaces of F_q^d, each given by its reduced echelon
// basis.
std::vector<std::vector<Vec>> subspaces(int d, int k, const SmallField& f) {
  std::vector<std::vector<Vec>> out;
  for_each_combination(d, k, [&](std::uint64_t pivots) {
    std::vector<int> pivot_cols;
    for (int c = 0; c < d; ++c) {
      if (pivots >> c & 1) pivot_cols.push_back(c);
    }
    std::vector<std::pair<int, int>> free_slots;
    for (int i = 0; i < k; ++i) {
      for (int c = pivot_cols[static_cast<std::size_t>(i)] + 1; c < d; ++c) {
        if (!(pivots >> c & 1)) free_slots.emplace_back(i, c);
      }
    }
    std::vector<int> values(free_slots.size(), 0);
    while (true) {
      std::vector<Vec> basis(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(d), 0));
      for (int i = 0; i < k; ++i) basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(pivot_cols[static_cast<std::size_t>(i)])] = 1;
      for (std::size_t s = 0; s < free_slots.size(); ++s) {
        basis[static_cast<std::size_t>(free_slots[s].first)][static_cast<std::size_t>(free_slots[s].second)] = values[s];
      }
      out.push_back(std::move(basis));
      std::size_t pos = 0;
      while (pos < values.size() && ++values[pos] == f.q) values[pos++] = 0;
      if (pos == values.size()) break;
    }
  });
  return out;
}

std::vector<bool> span_codes(const std::vector<Vec>& basis, int d, const SmallField& f) {
  int total = 1;
  for (int i = 0; i < d; ++i) total *= f.q;
  std::vector<bool> member(static_cast<std::size_t>(total), false);
  std::vector<int> coeffs(basis.size(), 0);
  while (true) {
    Vec v(static_cast<std::size_t>(d), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (int c = 0; c < d; ++c) {
        v[static_cast<std::size_t>(c)] = f.add(v[static_cast<std::size_t>(c)], f.mul(coeffs[i], basis[i][static_cast<std::size_t>(c)]));
      }
    }
    member[static_cast<std::size_t>(encode(v, f.q))] = true;
    std::size_t pos = 0;
    while (pos < coeffs.size() && ++coeffs[pos] == f.q) coeffs[pos++] = 0;
    if (pos == coeffs.size()) break;
  }
  return member;
}

int reduce_mod(const Rational& x, int p) {
  const Integer pp(p);
  Integer num = x.get_num() % pp;
  Integer den = x.get_den() % pp;
  if (den == 0) throw UnsupportedRep("subrep_count_fq: entry " + x.get_str() + " has no image in F_" + std::to_string(p));
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
  Integer r = (num * inv) % pp;
  if (r < 0) r += pp;
  return static_cast<int>(r.get_si());
}

}  // namespace

std::string to_string(RepKind kind) {
  switch (kind) {
    case RepKind::preprojective:
      return "preprojective";
    case RepKind::preinjective:
      return "preinjective";
    case RepKind::regular:
      return "regular";
  }
  return "preprojective";
}

std::string to_string(ChiRoute route) {
  switch (route) {
    case ChiRoute::closed_form:
      return "closed-form";
    case ChiRoute::coordinate_oracle:
      return "coordinate-oracle";
    case ChiRoute::cell_count:
      return "cell-count";
  }
  return "closed-form";
}

RepKind parse_rep_kind(const std::string& text) {
  if (text == "preprojective" || text == "preproj") return RepKind::preprojective;
  if (text == "preinjective" || text == "preinj") return RepKind::preinjective;
  if (text == "regular") return RepKind::regular;
  throw std::invalid_argument("unknown representation kind '" + text + "'");
}

ChiRoute parse_chi_route(const std::string& text) {
  if (text == "closed") return ChiRoute::closed_form;
  if (text == "oracle") return ChiRoute::coordinate_oracle;
  if (text == "cells") return ChiRoute::cell_count;
  throw std::invalid_argument("unknown chi route '" + text + "'");
}

DimVector kind_dimension(RepKind kind, int n) {
  if (n < 0) throw std::invalid_argument("representation index must be nonnegative");
  switch (kind) {
    case RepKind::preprojective:
      return {n, n + 1};
    case RepKind::preinjective:
      return {n + 1, n};
    case RepKind::regular:
      return {n, n};
  }
  return {};
}

QuiverRep explicit_rep(RepKind kind, int n) {
  switch (kind) {
    case RepKind::preprojective:
      return build_preprojective_explicit(n);
    case RepKind::preinjective:
      return build_preinjective_explicit(n);
    case RepKind::regular:
      return build_regular_explicit(n);
  }
  throw std::invalid_argument("explicit_rep: unknown kind");
}

Integer ChiTable::at(DimVector e) const {
  auto it = entries.find(e);
  return it == entries.end() ? Integer(0) : it->second;
}

bool ChiTable::same_values(const ChiTable& other) const {
  return dim == other.dim && entries == other.entries;
}

Integer chi_grassmannian(std::int64_t d, std::int64_t r) { return binom(d, r); }

Integer chi_z_closed(RepKind kind, int n, int p, int r) {
  require_family(kind, "chi_z_closed");
  if (n < 0) throw std::invalid_argument("chi_z_closed: n must be nonnegative");
  if (kind == RepKind::preprojective) {
    if (r == 0) return p == n + 1 ? 1 : 0;
    return binom(r - 1, n - p - r) * binom(n + 1 - r, p);
  }
  return binom(r, n - p - r) * binom(n - r, p);
}

Integer chi_z_cellcount(RepKind kind, int n, int p, int r) {
  require_family(kind, "chi_z_cellcount");
  if (n < 0) throw std::invalid_argument("chi_z_cellcount: n must be nonnegative");
  if (kind == RepKind::preprojective) return count_subsets_by_c_brute(n, r, n + 1 - p - r);
  return count_subsets_by_c_minus_eps_brute(n, r, n - p - r);
}

Integer chi_e_assembled(RepKind kind, int n, DimVector e) { return assemble(kind, n, e, chi_z_closed); }

Integer chi_e_assembled_cells(RepKind kind, int n, DimVector e) {
  return assemble(kind, n, e, chi_z_cellcount);
}

Integer chi_e_coordinate_oracle(const QuiverRep& m, DimVector e) {
  if (m.basis_tag().kind == BasisTag::Kind::none) {
    throw UnsupportedRep("chi_e_coordinate_oracle: representation has no distinguished basis");
  }
  const std::int64_t d1 = m.d1();
  const std::int64_t d2 = m.d2();
  if (d1 + d2 > kMaxOracleDim) {
    throw SizeLimit("chi_e_coordinate_oracle: d1 + d2 = " + std::to_string(d1 + d2) + " exceeds " +
                    std::to_string(kMaxOracleDim));
  }
  // required[j]: coordinates of M2 hit by some phi_k(u_j).
  std::vector<std::uint64_t> required(static_cast<std::size_t>(d1), 0);
  for (const auto& phi : m.maps()) {
    for (std::int64_t j = 0; j < d1; ++j) {
      for (std::int64_t i = 0; i < d2; ++i) {
        if (sgn(phi(i, j)) != 0) required[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
  Integer count = 0;
  for_each_combination(static_cast<int>(d1), static_cast<int>(e.d1), [&](std::uint64_t n1) {
    std::uint64_t need = 0;
    for (std::int64_t j = 0; j < d1; ++j) {
      if (n1 >> j & 1) need |= required[static_cast<std::size_t>(j)];
    }
    if (std::popcount(need) > e.d2) return;
    for_each_combination(static_cast<int>(d2), static_cast<int>(e.d2), [&](std::uint64_t n2) {
      if ((n2 & need) == need) ++count;
    });
  });
  return count;
}

ChiTable chi_table(RepKind kind, int n, ChiRoute route) {
  const DimVector d = kind_dimension(kind, n);
  ChiTable t = make_table(d, 2, route);
  t.kind = kind;
  t.n = n;
  const QuiverRep rep = route == ChiRoute::coordinate_oracle ? explicit_rep(kind, n) : QuiverRep::zero(2);
  for (std::int64_t e1 = 0; e1 <= d.d1; ++e1) {
    for (std::int64_t e2 = 0; e2 <= d.d2; ++e2) {
      const DimVector e{e1, e2};
      switch (route) {
        case ChiRoute::closed_form:
          t.entries[e] = chi_e_assembled(kind, n, e);
          break;
        case ChiRoute::cell_count:
          t.entries[e] = chi_e_assembled_cells(kind, n, e);
          break;
        case ChiRoute::coordinate_oracle:
          t.entries[e] = chi_e_coordinate_oracle(rep, e);
          break;
      }
    }
  }
  return t;
}

ChiTable chi_table_small(const QuiverRep& m) {
  const std::int64_t d1 = m.d1();
  const std::int64_t d2 = m.d2();
  if (d1 > 1 && d2 > 1) throw UnsupportedRep("chi_table_small: needs min(d1, d2) <= 1");
  ChiTable t = make_table(m.dim(), m.b(), ChiRoute::closed_form);
  for (std::int64_t e1 = 0; e1 <= d1; ++e1) {
    for (std::int64_t e2 = 0; e2 <= d2; ++e2) t.entries[{e1, e2}] = 0;
  }
  if (d1 <= 1) {
    // N1 = 0 leaves N2 free; N1 = M1 forces N2 to contain the span of the
    // images of the single basis vector.
    const std::int64_t span = d1 == 1 ? rank(m.phi_row()) : 0;
    for (std::int64_t e2 = 0; e2 <= d2; ++e2) {
      t.entries[{0, e2}] = binom(d2, e2);
      if (d1 == 1) t.entries[{1, e2}] = binom(d2 - span, e2 - span);
    }
  } else {
    // d2 <= 1: N2 = M2 leaves N1 free; N2 = 0 forces N1 into ker phi^c.
    const std::int64_t kernel = d1 - rank(m.phi_column());
    for (std::int64_t e1 = 0; e1 <= d1; ++e1) {
      t.entries[{e1, 0}] = binom(kernel, e1);
      if (d2 == 1) t.entries[{e1, 1}] = binom(d1, e1);
    }
  }
  return t;
}

LaurentPoly p_poly(const ChiTable& table) {
  std::vector<Term> terms;
  for (const auto& [e, chi] : table.entries) {
    if (chi != 0) terms.push_back({{table.dim.d2 - e.d2, e.d1}, chi});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly p_poly(RepKind kind, int n) { return p_poly(chi_table(kind, n, ChiRoute::closed_form)); }

LaurentPoly p_poly_z_shift(RepKind kind, int n) {
  require_family(kind, "p_poly_z_shift");
  const DimVector d = kind_dimension(kind, n);
  const LaurentPoly z1_plus_1 = LaurentPoly::x1() + LaurentPoly(1);
  LaurentPoly total;
  for (std::int64_t p = 0; p <= d.d2; ++p) {
    const LaurentPoly base = z1_plus_1.pow(static_cast<unsigned>(p));
    for (std::int64_t r = 0; r <= d.d1; ++r) {
      const Integer chi = chi_z_closed(kind, n, static_cast<int>(p), static_cast<int>(r));
      if (chi != 0) total += base.shifted({0, r}).scaled(chi);
    }
  }
  return total;
}

LaurentPoly p_poly_zprime_shift_preprojective(int n) {
  const DimVector d = kind_dimension(RepKind::preprojective, n);
  const LaurentPoly z2_plus_1 = LaurentPoly::x2() + LaurentPoly(1);
  LaurentPoly total;
  for (std::int64_t p = 0; p <= d.d1; ++p) {
    const LaurentPoly base = z2_plus_1.pow(static_cast<unsigned>(p));
    for (std::int64_t r = 0; r <= d.d2; ++r) {
      const auto shifted_p = static_cast<int>(p + 2 * r - n);
      if (shifted_p < 0) continue;
      const Integer chi = chi_z_closed(RepKind::preprojective, n + 1, shifted_p, static_cast<int>(n + 1 - r));
      if (chi != 0) total += base.shifted({r, 0}).scaled(chi);
    }
  }
  return total;
}

LaurentPoly x_poly(const ChiTable& table) {
  return p_poly(table).remap_exponents(table.b, -table.dim.d1, table.b, -table.dim.d2);
}

LaurentPoly x_poly(RepKind kind, int n) { return x_poly(chi_table(kind, n, ChiRoute::closed_form)); }

bool tplus_identity_holds(const LaurentPoly& p_m, DimVector dim_m, const LaurentPoly& p_tplus, int b) {
  const LaurentPoly z1_plus_1 = LaurentPoly::x1() + LaurentPoly(1);
  const LaurentPoly first = z1_plus_1.pow(static_cast<unsigned>(b)) * LaurentPoly::x2(-1);
  const LaurentPoly numerator = substitute(p_m, first, LaurentPoly::x1()).shifted({0, dim_m.d2});
  try {
    return div_exact(numerator, z1_plus_1.pow(static_cast<unsigned>(dim_m.d1))) == p_tplus;
  } catch (const NotDivisible&) {
    return false;
  }
}

bool verify_tplus_identity(int n, bool perturb) {
  const LaurentPoly p_m = p_poly(RepKind::preprojective, n);
  LaurentPoly p_tplus = p_poly(RepKind::preprojective, n + 1);
  if (perturb) p_tplus += LaurentPoly::monomial(1, p_tplus.terms().front().exp);
  return tplus_identity_holds(p_m, kind_dimension(RepKind::preprojective, n), p_tplus, 2);
}

Integer subrep_count_fq(const QuiverRep& m, DimVector e, int q) {
  if (q != 2 && q != 3 && q != 4) throw std::invalid_argument("subrep_count_fq: q must be 2, 3 or 4");
  if (m.d1() > kMaxFqDim || m.d2() > kMaxFqDim) {
    throw SizeLimit("subrep_count_fq: dimensions above " + std::to_string(kMaxFqDim));
  }
  if (e.d1 < 0 || e.d2 < 0 || e.d1 > m.d1() || e.d2 > m.d2()) return 0;
  const SmallField f{q};
  const int d1 = static_cast<int>(m.d1());
  const int d2 = static_cast<int>(m.d2());
  std::vector<std::vector<Vec>> maps;
  for (const auto& phi : m.maps()) {
    std::vector<Vec> reduced(static_cast<std::size_t>(d2), Vec(static_cast<std::size_t>(d1)));
    for (int i = 0; i < d2; ++i) {
      for (int j = 0; j < d1; ++j) {
        reduced[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = reduce_mod(phi(i, j), f.characteristic());
      }
    }
    maps.push_back(std::move(reduced));
  }
  const auto firsts = subspaces(d1, static_cast<int>(e.d1), f);
  const auto seconds = subspaces(d2, static_cast<int>(e.d2), f);
  std::vector<std::vector<bool>> second_spans;
  second_spans.reserve(seconds.size());
  for (const auto& basis : seconds) second_spans.push_back(span_codes(basis, d2, f));

  Integer count = 0;
  for (const auto& n1 : firsts) {
    // Images of the basis of N1 under every map; N2 must contain all of them.
    std::vector<int> image_codes;
    for (const auto& phi : maps) {
      for (const auto& u : n1) {
        Vec image(static_cast<std::size_t>(d2), 0);
        for (int i = 0; i < d2; ++i) {
          for (int j = 0; j < d1; ++j) {
            image[static_cast<std::size_t>(i)] =
                f.add(image[static_cast<std::size_t>(i)], f.mul(phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], u[static_cast<std::size_t>(j)]));
          }
        }
        image_codes.push_back(encode(image, q));
      }
    }
    for (const auto& span : second_spans) {
      bool contains = true;
      for (int code : image_codes) {
        if (!span[static_cast<std::size_t>(code)]) {
          contains = false;
          break;
        }
      }
      if (contains) ++count;
    }
  }
  return count;
}

}  // namespace kronecker
