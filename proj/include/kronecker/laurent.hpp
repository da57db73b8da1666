#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "kronecker/errors.hpp"

namespace kronecker {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent pair of a monomial x1^e1 x2^e2. Both components may be negative.
struct Exponent {
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend Exponent operator+(Exponent a, Exponent b) { return {a.e1 + b.e1, a.e2 + b.e2}; }
  friend Exponent operator-(Exponent a, Exponent b) { return {a.e1 - b.e1, a.e2 - b.e2}; }
};

/// Graded lexicographic order: total degree first, then e1. This is the
/// order in which terms are stored and serialized.
inline bool canonical_less(const Exponent& a, const Exponent& b) {
  const std::int64_t da = a.e1 + a.e2;
  const std::int64_t db = b.e1 + b.e2;
  if (da != db) return da < db;
  return a.e1 < b.e1;
}

/// A vector of the rank-2 root lattice. Used both for dimension vectors
/// (nonnegative) and for signed reflection arithmetic.
struct DimVector {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;
  friend DimVector operator+(DimVector a, DimVector b) { return {a.d1 + b.d1, a.d2 + b.d2}; }
  friend DimVector operator-(DimVector a, DimVector b) { return {a.d1 - b.d1, a.d2 - b.d2}; }

  bool is_dimension() const { return d1 >= 0 && d2 >= 0; }
  std::string to_string() const;
};

struct Term {
  Exponent exp;
  Integer coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.exp == b.exp && a.coeff == b.coeff;
  }
};

/// Sparse Laurent polynomial in x1, x2 with arbitrary-precision integer
/// coefficients.
///
/// Terms are kept sorted by canonical_less with no zero coefficients, so two
/// polynomials are equal exactly when their term vectors are equal.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Integer& constant);

  static LaurentPoly monomial(const Integer& coeff, Exponent exp);
  static LaurentPoly x1(std::int64_t power = 1) { return monomial(1, {power, 0}); }
  static LaurentPoly x2(std::int64_t power = 1) { return monomial(1, {0, power}); }

  /// Collects like terms and drops zeros; input order is irrelevant.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(Exponent exp) const;

  Exponent min_exponents() const;  // componentwise; ZeroPolynomial on zero
  Exponent max_exponents() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly scaled(const Integer& factor) const;
  /// Multiplies by the monomial x^shift.
  LaurentPoly shifted(Exponent shift) const;
  LaurentPoly pow(unsigned k) const;
  /// p(x2, x1).
  LaurentPoly swap_variables() const;
  /// Applies (e1, e2) -> (s1*e1 + o1, s2*e2 + o2) to every exponent.
  LaurentPoly remap_exponents(std::int64_t s1, std::int64_t o1, std::int64_t s2,
                              std::int64_t o2) const;

  /// Human-readable form, highest canonical term first, e.g. "x1^-1*x2^2 + x1^-1".
  std::string to_string() const;

 private:
  explicit LaurentPoly(std::vector<Term> sorted_terms, bool /*already_canonical*/)
      : terms_(std::move(sorted_terms)) {}

  std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// Returns r with q * r == p. Throws NotDivisible when no Laurent polynomial
/// with integer coefficients satisfies that, ZeroPolynomial when q == 0.
LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& q);

/// p(a, b). Negative powers are handled by clearing them into a denominator
/// a^k1 b^k2 and dividing exactly at the end.
LaurentPoly substitute(const LaurentPoly& p, const LaurentPoly& a, const LaurentPoly& b);

/// c0 + c1 t + c2 t^2 + ... evaluated at t = value.
LaurentPoly evaluate_univariate(const std::vector<Integer>& coeffs, const LaurentPoly& value);

/// (-min e1, -min e2) over the support.
DimVector denominator_vector(const LaurentPoly& p);

/// True iff p is nonzero and every coefficient is strictly positive.
bool is_positive(const LaurentPoly& p);

/// Convex-hull vertices of the support, counterclockwise, starting from the
/// lexicographically smallest exponent. Collinear boundary points are dropped.
std::vector<Exponent> newton_support(const LaurentPoly& p);

}  // namespace kronecker
