#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "kronecker/laurent.hpp"
#include "kronecker/quiver.hpp"

namespace kronecker {

/// The three families of indecomposable Kronecker (b = 2) representations
/// with explicit bases: M(-n), M(n+3) = D M(-n), and M^reg(n).
enum class RepKind { preprojective, preinjective, regular };

enum class ChiRoute { closed_form, coordinate_oracle, cell_count };

std::string to_string(RepKind kind);
std::string to_string(ChiRoute route);
/// Accepts "preprojective"/"preproj", "preinjective"/"preinj", "regular".
RepKind parse_rep_kind(const std::string& text);
/// Accepts "closed", "oracle", "cells".
ChiRoute parse_chi_route(const std::string& text);

/// Dimension vector of the representation of the given kind and index.
DimVector kind_dimension(RepKind kind, int n);

/// The explicit tagged representation of the given kind.
QuiverRep explicit_rep(RepKind kind, int n);

/// Euler characteristics chi_e(M) for all e in the box [0, d1] x [0, d2].
struct ChiTable {
  std::optional<RepKind> kind;  // empty for representations outside the families
  int n = 0;
  int b = 2;
  DimVector dim;
  ChiRoute provenance = ChiRoute::closed_form;
  std::map<DimVector, Integer> entries;  // every e in the box, zeros included

  /// chi_e, zero outside the box.
  Integer at(DimVector e) const;
  /// Equal dimension and entries; kind, index and provenance are not compared.
  bool same_values(const ChiTable& other) const;
};

/// chi(Gr_r(C^d)) = binom(d, r).
Integer chi_grassmannian(std::int64_t d, std::int64_t r);

/// chi(Z_{p,r}) from the binomial formulas. Only preprojective and regular
/// kinds are accepted (std::invalid_argument otherwise).
Integer chi_z_closed(RepKind kind, int n, int p, int r);

/// chi(Z_{p,r}) as the number of r-subsets J of [1, n] with c(J) = n+1-p-r
/// (preprojective) or c(J) - eps(J) = n-p-r (regular), by enumeration.
Integer chi_z_cellcount(RepKind kind, int n, int p, int r);

/// chi_e = sum_p binom(p, e2 - d2 + p) chi(Z_{p, e1}), with chi(Z) taken from
/// the closed form. Preinjective kinds are reduced to preprojective ones by
/// duality: chi_(e1,e2)(DM) = chi_(d1 - e2, d2 - e1)(M).
Integer chi_e_assembled(RepKind kind, int n, DimVector e);

/// Same assembly with chi(Z) from the subset count.
Integer chi_e_assembled_cells(RepKind kind, int n, DimVector e);

/// Number of pairs of coordinate subspaces (N1, N2) with dim (e1, e2) that
/// form a subrepresentation. Requires a basis tag (UnsupportedRep) and
/// d1 + d2 <= kMaxOracleDim (SizeLimit).
inline constexpr std::int64_t kMaxOracleDim = 26;
Integer chi_e_coordinate_oracle(const QuiverRep& m, DimVector e);

ChiTable chi_table(RepKind kind, int n, ChiRoute route);

/// Exact chi_e for any b when min(d1, d2) <= 1, where every quiver
/// Grassmannian is a Grassmannian of a quotient or a subspace. Throws
/// UnsupportedRep otherwise.
ChiTable chi_table_small(const QuiverRep& m);

/// P_M(z1, z2) = sum_e chi_e z1^(d2 - e2) z2^e1, written in the variables
/// x1 = z1, x2 = z2.
LaurentPoly p_poly(const ChiTable& table);
LaurentPoly p_poly(RepKind kind, int n);

/// sum_{p,r} chi(Z_{p,r}) (z1 + 1)^p z2^r (preprojective or regular).
LaurentPoly p_poly_z_shift(RepKind kind, int n);

/// sum_{p,r} chi(Z'_{p,r}) z1^r (z2 + 1)^p for M(-n), using
/// Z'_{p,r}(M) = Z_{p + 2r - n, n + 1 - r}(T+ M) and T+ M(-n) = M(-n-1).
LaurentPoly p_poly_zprime_shift_preprojective(int n);

/// X_M = x1^-d1 x2^-d2 P_M(x1^b, x2^b).
LaurentPoly x_poly(const ChiTable& table);
LaurentPoly x_poly(RepKind kind, int n);

/// True iff P_{T+M}(z1, z2) == (z1 + 1)^-d1 z2^d2 P_M((z1 + 1)^b / z2, z1)
/// as Laurent polynomials (false also when the right side is not Laurent).
bool tplus_identity_holds(const LaurentPoly& p_m, DimVector dim_m, const LaurentPoly& p_tplus, int b);

/// The identity for M = M(-n), T+ M = M(-n-1), b = 2. With perturb set, one
/// coefficient of P_{T+M} is increased by 1 before comparing.
bool verify_tplus_identity(int n, bool perturb = false);

/// Largest d1, d2 accepted by subrep_count_fq.
inline constexpr std::int64_t kMaxFqDim = 4;

/// Number of subrepresentations of dimension e over F_q, q in {2, 3, 4}, by
/// exhaustive subspace enumeration. Matrix entries are reduced into the prime
/// field (UnsupportedRep if a denominator vanishes there). Experimental; no
/// relation to chi is asserted.
Integer subrep_count_fq(const QuiverRep& m, DimVector e, int q);

}  // namespace kronecker
