#pragma once

#include <cstdint>
#include <vector>

#include "kronecker/laurent.hpp"

namespace kronecker {

/// S_n(x): S_{-1} = 0, S_0 = 1, S_{n+1} = x S_n - S_{n-1}. Requires n >= -1.
Integer cheb_s_value(std::int64_t n, const Integer& x);

/// Coefficients of S_n, constant term first. S_{-1} is the empty list.
std::vector<Integer> cheb_s_coeffs(std::int64_t n);

/// Coefficients of P_n = S_n - S_{n-2} (first-kind, normalized), n >= 0.
std::vector<Integer> cheb_p_coeffs(std::int64_t n);

/// Binomial coefficient; 0 whenever n < 0, k < 0 or k > n.
Integer binom(std::int64_t n, std::int64_t k);

/// A subset J of [1, n] with its component statistics.
struct SubsetProfile {
  int n = 0;
  std::vector<int> members;  // sorted, distinct, in [1, n]
  int components = 0;        // number of maximal runs of consecutive integers
  int epsilon = 0;           // 1 iff n is a member

  int components_minus_epsilon() const { return components - epsilon; }
};

/// Throws std::invalid_argument for members outside [1, n] or duplicates.
SubsetProfile subset_profile(int n, std::vector<int> members);

/// Number of r-subsets of [1, n] with exactly t connected components.
Integer count_subsets_by_c(std::int64_t n, std::int64_t r, std::int64_t t);

/// Number of r-subsets J of [1, n] with c(J) - eps(J) = t.
Integer count_subsets_by_c_minus_eps(std::int64_t n, std::int64_t r, std::int64_t t);

/// Exhaustive tallies over all 2^n subsets of [1, n], indexed [r][t].
/// by_c_minus_eps is indexed by t = c - eps, which is never negative.
struct SubsetTally {
  int n = 0;
  std::vector<std::vector<std::int64_t>> by_c;
  std::vector<std::vector<std::int64_t>> by_c_minus_eps;
};

inline constexpr int kMaxBruteForceN = 24;

/// Brute-force enumeration; throws SizeLimit for n > kMaxBruteForceN.
SubsetTally enumerate_subsets(int n);

/// Brute-force counterparts of the closed forms above (single query).
std::int64_t count_subsets_by_c_brute(int n, int r, int t);
std::int64_t count_subsets_by_c_minus_eps_brute(int n, int r, int t);

/// Sum over subsets D of [1, N] with no two consecutive integers of the
/// product of w_k, where w_k = x1^2 when k + phase is odd and x2^2 otherwise.
LaurentPoly f_poly_specialized(int big_n, int phase);

/// Number of subsets of [1, N] with no two consecutive integers.
std::int64_t count_admissible_subsets(int big_n);

}  // namespace kronecker
