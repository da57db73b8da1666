#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kronecker/laurent.hpp"
#include "kronecker/rational_matrix.hpp"

namespace kronecker {

/// Records that a representation carries the distinguished bases {u_k},
/// {v_k} of the explicit Kronecker constructions (b = 2 only).
struct BasisTag {
  enum class Kind { none, preprojective, preinjective, regular };
  Kind kind = Kind::none;
  int n = 0;

  static BasisTag none() { return {}; }
  static BasisTag preprojective(int n) { return {Kind::preprojective, n}; }
  static BasisTag preinjective(int n) { return {Kind::preinjective, n}; }
  static BasisTag regular(int n) { return {Kind::regular, n}; }

  friend bool operator==(const BasisTag&, const BasisTag&) = default;
  std::string to_string() const;
};

/// Representation of the generalized Kronecker quiver Q_b: spaces M1, M2 of
/// dimensions d1, d2 and b linear maps M1 -> M2, each a d2 x d1 matrix.
class QuiverRep {
 public:
  /// Throws std::invalid_argument if b < 2, the map count is not b, a map has
  /// the wrong shape, or a basis tag does not match the maps.
  QuiverRep(int b, std::int64_t d1, std::int64_t d2, std::vector<RationalMatrix> maps,
            BasisTag tag = {});

  static QuiverRep zero(int b);

  int b() const { return b_; }
  std::int64_t d1() const { return d1_; }
  std::int64_t d2() const { return d2_; }
  DimVector dim() const { return {d1_, d2_}; }
  const std::vector<RationalMatrix>& maps() const { return maps_; }
  const BasisTag& basis_tag() const { return tag_; }
  bool is_zero() const { return d1_ == 0 && d2_ == 0; }

  /// The maps stacked vertically: M1 -> M2^b, shape (b*d2) x d1.
  RationalMatrix phi_column() const;
  /// The maps side by side: M1^b -> M2, shape d2 x (b*d1).
  RationalMatrix phi_row() const;

  QuiverRep without_tag() const;

  friend bool operator==(const QuiverRep&, const QuiverRep&) = default;

  std::string to_string() const;

 private:
  int b_;
  std::int64_t d1_;
  std::int64_t d2_;
  std::vector<RationalMatrix> maps_;
  BasisTag tag_;
};

/// S_1 (dimension (1,0)) or S_2 (dimension (0,1)).
QuiverRep simple(int b, int vertex);

/// Transposes every map and swaps the two spaces.
QuiverRep dual(const QuiverRep& m);

/// Replaces (M1, M2) by (M2, coker phi^c); the new maps are the b column
/// blocks of the cokernel projection M2^b -> coker.
QuiverRep t_plus(const QuiverRep& m);

/// Replaces (M1, M2) by (ker phi^r, M1); the new maps are the b row blocks of
/// the kernel embedding ker -> M1^b.
QuiverRep t_minus(const QuiverRep& m);

bool phi_c_injective(const QuiverRep& m);

/// Largest dimension build_M will construct.
inline constexpr std::int64_t kMaxBuildDim = 1024;

/// M(m) = (T+)^n S_2 for m = -n <= 0 and (T-)^n S_1 for m = n + 3 >= 3.
/// Throws InitialClusterIndex for m in {1, 2} and SizeLimit when an
/// intermediate dimension would exceed kMaxBuildDim.
QuiverRep build_M(int b, std::int64_t m);

/// Whether build_M(b, m) stays within kMaxBuildDim, decided from the
/// predicted dimensions alone.
bool build_M_within_limit(int b, std::int64_t m);

/// Kronecker's normal form of M(-n): phi1(u_k) = v_k, phi2(u_k) = v_{k+1},
/// dimension (n, n+1).
QuiverRep build_preprojective_explicit(int n);

/// The dual of build_preprojective_explicit(n), dimension (n+1, n).
QuiverRep build_preinjective_explicit(int n);

/// M^reg(n): as the preprojective form but with v_{n+1} = 0, dimension (n, n).
QuiverRep build_regular_explicit(int n);

/// Block direct sum; the result is untagged.
QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);

/// Computable conditions that characterize images of T-.
struct EquivConditionsReport {
  bool phi_c_injective = false;            // phi^c : M1 -> M2^b is injective
  bool dim_tplus_is_reflection = false;    // dim T+M == sigma s1 (dim M)
  bool tminus_tplus_keeps_dim = false;     // dim T-T+M == dim M
  std::int64_t kernel_dim = 0;             // dim ker phi^c
  bool s1_summand_witness = false;         // a line in ker phi^c splits off S_1

  /// All conditions hold together or fail together, and the S_1 witness
  /// exists exactly when they fail.
  bool consistent() const;
  bool all_true() const {
    return phi_c_injective && dim_tplus_is_reflection && tminus_tplus_keeps_dim;
  }
};

EquivConditionsReport check_equiv_conditions(const QuiverRep& m);

/// A pair of invertible matrices (A on M1, B on M2) with B phi_k = psi_k A.
struct Isomorphism {
  RationalMatrix on_first;
  RationalMatrix on_second;
};

/// Solves the intertwiner equations and searches the solution space for an
/// invertible element. A returned value is a verified witness; nullopt means
/// none was found (certain when dimensions differ or no nonzero intertwiner
/// exists).
std::optional<Isomorphism> find_isomorphism(const QuiverRep& m, const QuiverRep& n);

/// Checks B phi_k == psi_k A for all k and that A, B are invertible.
bool is_isomorphism(const QuiverRep& m, const QuiverRep& n, const Isomorphism& iso);

}  // namespace kronecker
