#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <variant>
#include <vector>

#include "kronecker/laurent.hpp"

namespace kronecker {

/// x_m of the Kronecker cluster algebra (b = 2) from the binomial closed
/// forms. Throws InitialClusterIndex for m in {1, 2}.
LaurentPoly x_closed_form(std::int64_t m);

/// s_n = x1^-n x2^-n sum_{q+r<=n} binom(n-r, q) binom(n-q, r) x1^2q x2^2r,
/// with s_0 = 1. Negative n throws std::invalid_argument.
LaurentPoly s_elem(std::int64_t n);

/// z_n for n >= 1. The coefficients n/(n-q-r) binom(...) binom(...) are
/// accumulated as rationals; a non-integral result throws std::logic_error.
LaurentPoly z_elem(std::int64_t n);

/// (x1^2 + x2^2 + 1) / (x1 x2).
LaurentPoly z1();

/// x_m^p x_{m+1}^q for the cluster {x_m, x_{m+1}}.
struct ClusterMonomial {
  std::int64_t m = 1;
  std::int64_t p = 0;
  std::int64_t q = 0;
  friend bool operator==(const ClusterMonomial&, const ClusterMonomial&) = default;
  friend auto operator<=>(const ClusterMonomial&, const ClusterMonomial&) = default;
};

struct ZElement {
  std::int64_t n = 1;
  friend bool operator==(const ZElement&, const ZElement&) = default;
  friend auto operator<=>(const ZElement&, const ZElement&) = default;
};

using BasisTagValue = std::variant<ClusterMonomial, ZElement>;

/// Value of a canonical basis element. Throws std::invalid_argument for
/// negative exponents or n < 1.
LaurentPoly basis_element(const BasisTagValue& tag);

/// Rewrites x_m^0 x_{m+1}^q as x_{m+1}^q x_{m+2}^0 and the unit as
/// x_1^0 x_2^0, so every basis element has one tag.
BasisTagValue canonical_tag(const BasisTagValue& tag);

std::string describe(const BasisTagValue& tag);

/// A tag together with its value, computed on first use. Copies share the
/// computed value; concurrent first use is safe.
class BasisElement {
 public:
  explicit BasisElement(BasisTagValue tag);
  const BasisTagValue& tag() const { return tag_; }
  const LaurentPoly& value() const;

 private:
  struct Lazy {
    std::once_flag once;
    LaurentPoly value;
  };
  BasisTagValue tag_;
  std::shared_ptr<Lazy> lazy_;
};

/// Canonical basis elements whose denominator vectors (d1, d2) satisfy
/// |d1| <= bound and |d2| <= bound: cluster monomials ordered by (m, p, q),
/// then z_n by n.
std::vector<BasisElement> list_basis(std::int64_t bound);

}  // namespace kronecker
