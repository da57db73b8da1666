#include "kronecker/canonical.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "kronecker/chebyshev.hpp"
#include "kronecker/cluster.hpp"

namespace kronecker {

namespace {

// Denominator vector of x_m for b = 2, including the initial cluster.
DimVector kronecker_denominator(std::int64_t m) {
  if (m == 1) return {-1, 0};
  if (m == 2) return {0, -1};
  return alpha(2, m);
}

}  // namespace

LaurentPoly x_closed_form(std::int64_t m) {
  if (m == 1 || m == 2) {
    throw InitialClusterIndex("x_closed_form: x_" + std::to_string(m) + " belongs to the initial cluster");
  }
  std::vector<Term> terms;
  if (m <= 0) {
    const std::int64_t n = -m;
    terms.push_back({{2 * (n + 1), 0}, 1});
    for (std::int64_t q = 0; q <= n; ++q) {
      for (std::int64_t r = 0; q + r <= n; ++r) {
        terms.push_back({{2 * q, 2 * r}, binom(n + 1 - r, q) * binom(n - q, r)});
      }
    }
    return LaurentPoly::from_terms(std::move(terms)).shifted({-n, -n - 1});
  }
  const std::int64_t n = m - 3;
  terms.push_back({{0, 2 * (n + 1)}, 1});
  for (std::int64_t q = 0; q <= n; ++q) {
    for (std::int64_t r = 0; q + r <= n; ++r) {
      terms.push_back({{2 * q, 2 * r}, binom(n - r, q) * binom(n + 1 - q, r)});
    }
  }
  return LaurentPoly::from_terms(std::move(terms)).shifted({-n - 1, -n});
}

LaurentPoly s_elem(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("s_elem: n must be nonnegative");
  if (n == 0) return LaurentPoly(1);
  std::vector<Term> terms;
  for (std::int64_t q = 0; q <= n; ++q) {
    for (std::int64_t r = 0; q + r <= n; ++r) {
      terms.push_back({{2 * q, 2 * r}, binom(n - r, q) * binom(n - q, r)});
    }
  }
  return LaurentPoly::from_terms(std::move(terms)).shifted({-n, -n});
}

LaurentPoly z_elem(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("z_elem: n must be positive");
  std::vector<Term> terms;
  terms.push_back({{2 * n, 0}, 1});
  terms.push_back({{0, 2 * n}, 1});
  for (std::int64_t q = 0; q <= n - 1; ++q) {
    for (std::int64_t r = 0; q + r <= n - 1; ++r) {
      Rational c(Integer(static_cast<long>(n)), Integer(static_cast<long>(n - q - r)));
      c *= binom(n - 1 - r, q) * binom(n - 1 - q, r);
      c.canonicalize();
      if (c.get_den() != 1) {
        throw std::logic_error("z_elem: coefficient " + c.get_str() + " of x1^" + std::to_string(2 * q) +
                               " x2^" + std::to_string(2 * r) + " is not an integer");
      }
      terms.push_back({{2 * q, 2 * r}, c.get_num()});
    }
  }
  return LaurentPoly::from_terms(std::move(terms)).shifted({-n, -n});
}

LaurentPoly z1() {
  return LaurentPoly::from_terms({{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, 1}}).shifted({-1, -1});
}

LaurentPoly basis_element(const BasisTagValue& tag) {
  if (const auto* z = std::get_if<ZElement>(&tag)) return z_elem(z->n);
  const auto& c = std::get<ClusterMonomial>(tag);
  if (c.p < 0 || c.q < 0) throw std::invalid_argument("basis_element: exponents must be nonnegative");
  ClusterContext ctx(2);
  return ctx.cluster_var(c.m).pow(static_cast<unsigned>(c.p)) * ctx.cluster_var(c.m + 1).pow(static_cast<unsigned>(c.q));
}

BasisTagValue canonical_tag(const BasisTagValue& tag) {
  if (std::holds_alternative<ZElement>(tag)) return tag;
  const auto& c = std::get<ClusterMonomial>(tag);
  if (c.p == 0 && c.q == 0) return ClusterMonomial{1, 0, 0};
  if (c.p == 0) return ClusterMonomial{c.m + 1, c.q, 0};
  return tag;
}

std::string describe(const BasisTagValue& tag) {
  if (const auto* z = std::get_if<ZElement>(&tag)) return "z_" + std::to_string(z->n);
  const auto& c = std::get<ClusterMonomial>(tag);
  return "x_" + std::to_string(c.m) + "^" + std::to_string(c.p) + " x_" + std::to_string(c.m + 1) + "^" +
         std::to_string(c.q);
}

BasisElement::BasisElement(BasisTagValue tag) : tag_(tag), lazy_(std::make_shared<Lazy>()) {}

const LaurentPoly& BasisElement::value() const {
  std::call_once(lazy_->once, [this] { lazy_->value = basis_element(tag_); });
  return lazy_->value;
}

std::vector<BasisElement> list_basis(std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("list_basis: bound must be nonnegative");
  auto in_box = [bound](DimVector d) {
    return d.d1 >= -bound && d.d1 <= bound && d.d2 >= -bound && d.d2 <= bound;
  };
  // Every x_m with m outside this window has a denominator entry above bound.
  std::set<ClusterMonomial> monomials;
  for (std::int64_t m = -bound - 1; m <= bound + 3; ++m) {
    const DimVector a = kronecker_denominator(m);
    const DimVector c = kronecker_denominator(m + 1);
    for (std::int64_t p = 0; p <= bound + 1; ++p) {
      for (std::int64_t q = 0; q <= bound + 1; ++q) {
        const DimVector d{p * a.d1 + q * c.d1, p * a.d2 + q * c.d2};
        if (!in_box(d)) continue;
        monomials.insert(std::get<ClusterMonomial>(canonical_tag(ClusterMonomial{m, p, q})));
      }
    }
  }
  std::vector<BasisElement> out;
  for (const auto& c : monomials) out.emplace_back(c);
  for (std::int64_t n = 1; n <= bound; ++n) out.emplace_back(ZElement{n});
  return out;
}

}  // namespace kronecker
