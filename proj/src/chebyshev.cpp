#include "kronecker/chebyshev.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kronecker {

namespace {

std::vector<Integer> subtract_lists(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  while (!out.empty() && sgn(out.back()) == 0) out.pop_back();
  return out;
}

void check_subset_size(int n) {
  if (n < 0) throw std::invalid_argument("subset enumeration needs n >= 0");
  if (n > kMaxBruteForceN) {
    throw SizeLimit("subset enumeration is limited to n <= " + std::to_string(kMaxBruteForceN));
  }
}

// Components and epsilon of the subset encoded by mask (bit i-1 <-> i).
struct MaskStats {
  int size;
  int components;
  int epsilon;
};

MaskStats stats_of(std::uint32_t mask, int n) {
  const int size = __builtin_popcount(mask);
  // A run starts at every member whose predecessor is absent.
  const int components = __builtin_popcount(mask & ~(mask << 1U));
  const int epsilon = n > 0 ? static_cast<int>((mask >> static_cast<unsigned>(n - 1)) & 1U) : 0;
  return {size, components, epsilon};
}

}  // namespace

Integer cheb_s_value(std::int64_t n, const Integer& x) {
  if (n < -1) throw std::invalid_argument("cheb_s_value: n must be >= -1");
  Integer prev = 0;  // S_{-1}
  Integer cur = 1;   // S_0
  if (n == -1) return prev;
  for (std::int64_t k = 0; k < n; ++k) {
    Integer next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Integer> cheb_s_coeffs(std::int64_t n) {
  if (n < -1) throw std::invalid_argument("cheb_s_coeffs: n must be >= -1");
  std::vector<Integer> prev;     // S_{-1} = 0
  std::vector<Integer> cur{1};   // S_0 = 1
  if (n == -1) return prev;
  for (std::int64_t k = 0; k < n; ++k) {
    std::vector<Integer> shifted(cur.size() + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) shifted[i + 1] = cur[i];
    std::vector<Integer> next = subtract_lists(shifted, prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Integer> cheb_p_coeffs(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("cheb_p_coeffs: n must be >= 0");
  // S_{-2} = 0 by convention, so P_0 = S_0 and P_1 = S_1 - S_{-1}.
  const std::vector<Integer> lower = n >= 1 ? cheb_s_coeffs(n - 2) : std::vector<Integer>{};
  return subtract_lists(cheb_s_coeffs(n), lower);
}

Integer binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

SubsetProfile subset_profile(int n, std::vector<int> members) {
  if (n < 0) throw std::invalid_argument("subset_profile: n must be >= 0");
  std::sort(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 1 || members[i] > n) {
      throw std::invalid_argument("subset_profile: member " + std::to_string(members[i]) +
                                  " outside [1, " + std::to_string(n) + "]");
    }
    if (i > 0 && members[i] == members[i - 1]) {
      throw std::invalid_argument("subset_profile: duplicate member " + std::to_string(members[i]));
    }
  }
  SubsetProfile profile;
  profile.n = n;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i == 0 || members[i] != members[i - 1] + 1) ++profile.components;
  }
  profile.epsilon = (!members.empty() && members.back() == n) ? 1 : 0;
  profile.members = std::move(members);
  return profile;
}

Integer count_subsets_by_c(std::int64_t n, std::int64_t r, std::int64_t t) {
  // binom(r-1, t-1) vanishes at r = 0, but the empty set is the one
  // 0-subset and it has no components.
  if (r == 0) return (t == 0 && n >= 0) ? 1 : 0;
  return binom(r - 1, t - 1) * binom(n + 1 - r, t);
}

Integer count_subsets_by_c_minus_eps(std::int64_t n, std::int64_t r, std::int64_t t) {
  return binom(r, t) * binom(n - r, t);
}

SubsetTally enumerate_subsets(int n) {
  check_subset_size(n);
  SubsetTally tally;
  tally.n = n;
  tally.by_c.assign(static_cast<std::size_t>(n + 1), std::vector<std::int64_t>(static_cast<std::size_t>(n + 2), 0));
  tally.by_c_minus_eps = tally.by_c;
  const std::uint32_t end = std::uint32_t{1} << static_cast<unsigned>(n);
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    const MaskStats s = stats_of(mask, n);
    ++tally.by_c[static_cast<std::size_t>(s.size)][static_cast<std::size_t>(s.components)];
    ++tally.by_c_minus_eps[static_cast<std::size_t>(s.size)][static_cast<std::size_t>(s.components - s.epsilon)];
  }
  return tally;
}

std::int64_t count_subsets_by_c_brute(int n, int r, int t) {
  check_subset_size(n);
  std::int64_t count = 0;
  const std::uint32_t end = std::uint32_t{1} << static_cast<unsigned>(n);
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    const MaskStats s = stats_of(mask, n);
    if (s.size == r && s.components == t) ++count;
  }
  return count;
}

std::int64_t count_subsets_by_c_minus_eps_brute(int n, int r, int t) {
  check_subset_size(n);
  std::int64_t count = 0;
  const std::uint32_t end = std::uint32_t{1} << static_cast<unsigned>(n);
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    const MaskStats s = stats_of(mask, n);
    if (s.size == r && s.components - s.epsilon == t) ++count;
  }
  return count;
}

LaurentPoly f_poly_specialized(int big_n, int phase) {
  if (big_n < 1) throw std::invalid_argument("f_poly_specialized: N must be >= 1");
  if (phase != 0 && phase != 1) throw std::invalid_argument("f_poly_specialized: phase must be 0 or 1");
  // Admissible subsets of [1, k] either skip k or take k and skip k - 1:
  // F_k = F_{k-1} + w_k F_{k-2}, with F_{-1} = F_0 = 1.
  LaurentPoly before_prev(1);
  LaurentPoly prev(1);
  for (int k = 1; k <= big_n; ++k) {
    const LaurentPoly w = (k + phase) % 2 == 1 ? LaurentPoly::x1(2) : LaurentPoly::x2(2);
    LaurentPoly next = prev + w * before_prev;
    before_prev = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

std::int64_t count_admissible_subsets(int big_n) {
  if (big_n < 0) throw std::invalid_argument("count_admissible_subsets: N must be >= 0");
  std::int64_t before_prev = 1;
  std::int64_t prev = 1;
  for (int k = 1; k <= big_n; ++k) {
    const std::int64_t next = prev + before_prev;
    before_prev = prev;
    prev = next;
  }
  return prev;
}

}  // namespace kronecker
