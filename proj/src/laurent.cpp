#include "kronecker/laurent.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace kronecker {

namespace {

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept {
    const auto a = static_cast<std::uint64_t>(e.e1);
    const auto b = static_cast<std::uint64_t>(e.e2);
    return static_cast<std::size_t>(a * 0x9E3779B97F4A7C15ULL ^ (b + 0x7F4A7C159E3779B9ULL + (a << 6)));
  }
};

bool term_less(const Term& a, const Term& b) { return canonical_less(a.exp, b.exp); }

// Lattice coset o + g*Z^2 restricted to a box; cells are addressed row-major
// in (i1, i2) with e1 = o1 + g1*i1, e2 = o2 + g2*i2.
struct Grid {
  std::int64_t o1 = 0, o2 = 0;
  std::int64_t g1 = 1, g2 = 1;
  std::int64_t n1 = 0, n2 = 0;

  std::int64_t cells() const { return n1 * n2; }
  std::int64_t index(Exponent e) const { return ((e.e1 - o1) / g1) * n2 + (e.e2 - o2) / g2; }
  Exponent exponent(std::int64_t idx) const { return {o1 + g1 * (idx / n2), o2 + g2 * (idx % n2)}; }
};

struct Support {
  Exponent lo, hi;
  std::int64_t g1 = 0, g2 = 0;  // gcd of offsets from lo; 0 when the coordinate is constant
};

Support support_of(const std::vector<Term>& terms) {
  Support s;
  s.lo = s.hi = terms.front().exp;
  for (const auto& t : terms) {
    s.lo.e1 = std::min(s.lo.e1, t.exp.e1);
    s.lo.e2 = std::min(s.lo.e2, t.exp.e2);
    s.hi.e1 = std::max(s.hi.e1, t.exp.e1);
    s.hi.e2 = std::max(s.hi.e2, t.exp.e2);
  }
  for (const auto& t : terms) {
    s.g1 = std::gcd(s.g1, t.exp.e1 - s.lo.e1);
    s.g2 = std::gcd(s.g2, t.exp.e2 - s.lo.e2);
  }
  return s;
}

std::int64_t common_stride(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  return g == 0 ? 1 : g;
}

// Upper bound on grid size we are willing to allocate densely.
constexpr std::int64_t kMaxDenseCells = std::int64_t{1} << 24;

bool dense_worthwhile(std::int64_t n1, std::int64_t n2, std::int64_t work) {
  if (n1 <= 0 || n2 <= 0) return false;
  if (n1 > kMaxDenseCells || n2 > kMaxDenseCells) return false;
  const std::int64_t cells = n1 * n2;
  return cells <= kMaxDenseCells && cells <= 8 * work + 4096;
}

std::vector<Term> gather(const Grid& grid, std::vector<Integer>& cells) {
  std::vector<Term> out;
  for (std::int64_t i = 0; i < grid.cells(); ++i) {
    if (sgn(cells[static_cast<std::size_t>(i)]) != 0) {
      out.push_back(Term{grid.exponent(i), std::move(cells[static_cast<std::size_t>(i)])});
    }
  }
  std::sort(out.begin(), out.end(), term_less);
  return out;
}

std::vector<Term> multiply_terms(const std::vector<Term>& p, const std::vector<Term>& q) {
  if (p.empty() || q.empty()) return {};
  if (p.size() > q.size()) return multiply_terms(q, p);

  if (p.size() == 1) {
    // Monomial times polynomial: translation preserves the canonical order.
    std::vector<Term> out;
    out.reserve(q.size());
    for (const auto& t : q) out.push_back(Term{t.exp + p[0].exp, t.coeff * p[0].coeff});
    return out;
  }

  const Support sp = support_of(p);
  const Support sq = support_of(q);
  Grid grid;
  grid.g1 = common_stride(sp.g1, sq.g1);
  grid.g2 = common_stride(sp.g2, sq.g2);
  grid.o1 = sp.lo.e1 + sq.lo.e1;
  grid.o2 = sp.lo.e2 + sq.lo.e2;
  grid.n1 = (sp.hi.e1 - sp.lo.e1 + sq.hi.e1 - sq.lo.e1) / grid.g1 + 1;
  grid.n2 = (sp.hi.e2 - sp.lo.e2 + sq.hi.e2 - sq.lo.e2) / grid.g2 + 1;

  const auto work = static_cast<std::int64_t>(p.size()) * static_cast<std::int64_t>(q.size());
  if (dense_worthwhile(grid.n1, grid.n2, work)) {
    // Cell index is linear in the exponent, so index(a + b) = ip(a) + iq(b).
    std::vector<std::int64_t> iq(q.size());
    for (std::size_t j = 0; j < q.size(); ++j) {
      iq[j] = ((q[j].exp.e1 - sq.lo.e1) / grid.g1) * grid.n2 + (q[j].exp.e2 - sq.lo.e2) / grid.g2;
    }
    std::vector<Integer> cells(static_cast<std::size_t>(grid.cells()));
    for (const auto& a : p) {
      const std::int64_t ip =
          ((a.exp.e1 - sp.lo.e1) / grid.g1) * grid.n2 + (a.exp.e2 - sp.lo.e2) / grid.g2;
      mpz_srcptr ac = a.coeff.get_mpz_t();
      for (std::size_t j = 0; j < q.size(); ++j) {
        mpz_addmul(cells[static_cast<std::size_t>(ip + iq[j])].get_mpz_t(), ac,
                   q[j].coeff.get_mpz_t());
      }
    }
    return gather(grid, cells);
  }

  std::unordered_map<Exponent, Integer, ExponentHash> acc;
  acc.reserve(static_cast<std::size_t>(std::min<std::int64_t>(work, 1 << 22)));
  for (const auto& a : p) {
    for (const auto& b : q) {
      mpz_addmul(acc[a.exp + b.exp].get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (sgn(c) != 0) out.push_back(Term{e, std::move(c)});
  }
  std::sort(out.begin(), out.end(), term_less);
  return out;
}

// Lexicographic (e1, then e2) order, largest first. A monomial order, which is
// all the division algorithm needs.
bool lex_greater(const Exponent& a, const Exponent& b) {
  if (a.e1 != b.e1) return a.e1 > b.e1;
  return a.e2 > b.e2;
}

[[noreturn]] void not_divisible(const char* why) {
  throw NotDivisible(std::string("div_exact: ") + why);
}

std::vector<Term> divide_terms(const std::vector<Term>& p, const std::vector<Term>& q) {
  if (q.empty()) throw ZeroPolynomial("div_exact: division by the zero polynomial");
  if (p.empty()) return {};

  if (q.size() == 1) {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), q[0].coeff.get_mpz_t())) {
        not_divisible("coefficient is not divisible by the monomial's coefficient");
      }
      Integer c;
      mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), q[0].coeff.get_mpz_t());
      out.push_back(Term{t.exp - q[0].exp, std::move(c)});
    }
    return out;
  }

  const Support sp = support_of(p);
  const Support sq = support_of(q);
  // Minimal and maximal exponents add under multiplication in an integral
  // domain, so any quotient lives in this box.
  const Exponent qlo = sp.lo - sq.lo;
  const Exponent qhi = sp.hi - sq.hi;
  if (qhi.e1 < qlo.e1 || qhi.e2 < qlo.e2) not_divisible("support of the divisor does not fit");

  const Term* lead = &q.front();
  for (const auto& t : q) {
    if (lex_greater(t.exp, lead->exp)) lead = &t;
  }
  auto in_quotient_box = [&](const Exponent& e) {
    return e.e1 >= qlo.e1 && e.e1 <= qhi.e1 && e.e2 >= qlo.e2 && e.e2 <= qhi.e2;
  };

  Grid grid;
  grid.g1 = common_stride(sp.g1, sq.g1);
  grid.g2 = common_stride(sp.g2, sq.g2);
  grid.o1 = sp.lo.e1;
  grid.o2 = sp.lo.e2;
  grid.n1 = (sp.hi.e1 - sp.lo.e1) / grid.g1 + 1;
  grid.n2 = (sp.hi.e2 - sp.lo.e2) / grid.g2 + 1;

  std::vector<Term> quotient;
  Integer k;

  if (dense_worthwhile(grid.n1, grid.n2, static_cast<std::int64_t>(p.size() + q.size()))) {
    std::vector<Integer> rem(static_cast<std::size_t>(grid.cells()));
    for (const auto& t : p) rem[static_cast<std::size_t>(grid.index(t.exp))] = t.coeff;
    std::vector<std::int64_t> iq(q.size());
    for (std::size_t j = 0; j < q.size(); ++j) {
      iq[j] = grid.index(q[j].exp + qlo) - grid.index(lead->exp + qlo);
    }
    // Row-major descending index order coincides with lex_greater on the grid.
    for (std::int64_t c = grid.cells() - 1; c >= 0; --c) {
      Integer& cell = rem[static_cast<std::size_t>(c)];
      if (sgn(cell) == 0) continue;
      const Exponent t = grid.exponent(c) - lead->exp;
      if (!in_quotient_box(t)) not_divisible("remainder term outside the quotient support");
      if (!mpz_divisible_p(cell.get_mpz_t(), lead->coeff.get_mpz_t())) {
        not_divisible("leading coefficient does not divide the remainder");
      }
      mpz_divexact(k.get_mpz_t(), cell.get_mpz_t(), lead->coeff.get_mpz_t());
      for (std::size_t j = 0; j < q.size(); ++j) {
        mpz_submul(rem[static_cast<std::size_t>(c + iq[j])].get_mpz_t(), k.get_mpz_t(),
                   q[j].coeff.get_mpz_t());
      }
      quotient.push_back(Term{t, k});
    }
    std::sort(quotient.begin(), quotient.end(), term_less);
    return quotient;
  }

  // Sparse fallback: ordered remainder, repeatedly cancel its leading term.
  auto cmp = [](const Exponent& a, const Exponent& b) { return lex_greater(a, b); };
  std::map<Exponent, Integer, decltype(cmp)> rem(cmp);
  for (const auto& t : p) rem.emplace(t.exp, t.coeff);
  while (!rem.empty()) {
    auto it = rem.begin();
    const Exponent t = it->first - lead->exp;
    if (!in_quotient_box(t)) not_divisible("remainder term outside the quotient support");
    if (!mpz_divisible_p(it->second.get_mpz_t(), lead->coeff.get_mpz_t())) {
      not_divisible("leading coefficient does not divide the remainder");
    }
    mpz_divexact(k.get_mpz_t(), it->second.get_mpz_t(), lead->coeff.get_mpz_t());
    for (const auto& s : q) {
      auto [pos, inserted] = rem.try_emplace(t + s.exp);
      mpz_submul(pos->second.get_mpz_t(), k.get_mpz_t(), s.coeff.get_mpz_t());
      if (sgn(pos->second) == 0) rem.erase(pos);
    }
    quotient.push_back(Term{t, k});
  }
  std::sort(quotient.begin(), quotient.end(), term_less);
  return quotient;
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && canonical_less(a[i].exp, b[j].exp))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || canonical_less(b[j].exp, a[i].exp)) {
      out.push_back(Term{b[j].exp, subtract ? Integer(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Integer c = subtract ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
      if (sgn(c) != 0) out.push_back(Term{a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

void append_power(std::ostringstream& os, const char* var, std::int64_t power, bool& first_factor) {
  if (power == 0) return;
  if (!first_factor) os << '*';
  os << var;
  if (power != 1) os << '^' << power;
  first_factor = false;
}

}  // namespace

std::string DimVector::to_string() const {
  return "(" + std::to_string(d1) + ", " + std::to_string(d2) + ")";
}

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(Integer(constant)) {}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (sgn(constant) != 0) terms_.push_back(Term{{0, 0}, constant});
}

LaurentPoly LaurentPoly::monomial(const Integer& coeff, Exponent exp) {
  LaurentPoly p;
  if (sgn(coeff) != 0) p.terms_.push_back(Term{exp, coeff});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  return LaurentPoly(std::move(out), true);
}

Integer LaurentPoly::coefficient(Exponent exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, const Exponent& e) { return canonical_less(t.exp, e); });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

Exponent LaurentPoly::min_exponents() const {
  if (is_zero()) throw ZeroPolynomial("min_exponents of the zero polynomial");
  return support_of(terms_).lo;
}

Exponent LaurentPoly::max_exponents() const {
  if (is_zero()) throw ZeroPolynomial("max_exponents of the zero polynomial");
  return support_of(terms_).hi;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  terms_ = multiply_terms(terms_, other.terms_);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  return LaurentPoly(multiply_terms(a.terms_, b.terms_), true);
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

LaurentPoly LaurentPoly::scaled(const Integer& factor) const {
  if (sgn(factor) == 0) return {};
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coeff *= factor;
  return out;
}

LaurentPoly LaurentPoly::shifted(Exponent shift) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.exp = t.exp + shift;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::swap_variables() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{{t.exp.e2, t.exp.e1}, t.coeff});
  return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::remap_exponents(std::int64_t s1, std::int64_t o1, std::int64_t s2,
                                         std::int64_t o2) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{{s1 * t.exp.e1 + o1, s2 * t.exp.e2 + o2}, t.coeff});
  return from_terms(std::move(out));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool negative = sgn(it->coeff) < 0;
    const Integer magnitude = abs(it->coeff);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool constant = it->exp.e1 == 0 && it->exp.e2 == 0;
    bool first_factor = true;
    if (magnitude != 1 || constant) {
      os << magnitude.get_str();
      first_factor = false;
    }
    append_power(os, "x1", it->exp.e1, first_factor);
    append_power(os, "x2", it->exp.e2, first_factor);
  }
  return os.str();
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& q) {
  return LaurentPoly::from_terms(divide_terms(p.terms(), q.terms()));
}

namespace {

// Sum of coeffs[i] * powers[i], merging into one sorted term list.
LaurentPoly linear_combination(const std::vector<std::pair<std::int64_t, Integer>>& coeffs,
                               const std::vector<LaurentPoly>& powers) {
  std::vector<Term> all;
  for (const auto& [i, c] : coeffs) {
    for (const auto& t : powers[static_cast<std::size_t>(i)].terms()) {
      all.push_back(Term{t.exp, t.coeff * c});
    }
  }
  return LaurentPoly::from_terms(std::move(all));
}

std::vector<LaurentPoly> power_table(const LaurentPoly& base, std::int64_t max_power) {
  std::vector<LaurentPoly> powers;
  powers.reserve(static_cast<std::size_t>(max_power + 1));
  powers.emplace_back(1);
  for (std::int64_t i = 1; i <= max_power; ++i) powers.push_back(powers.back() * base);
  return powers;
}

}  // namespace

LaurentPoly substitute(const LaurentPoly& p, const LaurentPoly& a, const LaurentPoly& b) {
  if (p.is_zero()) return {};
  const Exponent lo = p.min_exponents();
  const Exponent hi = p.max_exponents();
  const std::int64_t clear1 = std::min<std::int64_t>(0, lo.e1);
  const std::int64_t clear2 = std::min<std::int64_t>(0, lo.e2);

  const auto a_pow = power_table(a, hi.e1 - clear1);

  // Group by the (shifted) power of the second variable.
  std::map<std::int64_t, std::vector<std::pair<std::int64_t, Integer>>> by_second;
  for (const auto& t : p.terms()) {
    by_second[t.exp.e2 - clear2].emplace_back(t.exp.e1 - clear1, t.coeff);
  }

  LaurentPoly numerator;
  LaurentPoly b_power(1);
  std::int64_t current = 0;
  for (const auto& [j, coeffs] : by_second) {
    while (current < j) {
      b_power *= b;
      ++current;
    }
    numerator += linear_combination(coeffs, a_pow) * b_power;
  }

  if (clear1 == 0 && clear2 == 0) return numerator;
  const LaurentPoly denominator = a.pow(static_cast<unsigned>(-clear1)) * b.pow(static_cast<unsigned>(-clear2));
  return div_exact(numerator, denominator);
}

LaurentPoly evaluate_univariate(const std::vector<Integer>& coeffs, const LaurentPoly& value) {
  LaurentPoly acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * value + LaurentPoly(*it);
  }
  return acc;
}

DimVector denominator_vector(const LaurentPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("denominator_vector of the zero polynomial");
  const Exponent lo = p.min_exponents();
  return {-lo.e1, -lo.e2};
}

bool is_positive(const LaurentPoly& p) {
  if (p.is_zero()) return false;
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const Term& t) { return sgn(t.coeff) > 0; });
}

std::vector<Exponent> newton_support(const LaurentPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("newton_support of the zero polynomial");
  std::vector<Exponent> pts;
  pts.reserve(p.size());
  for (const auto& t : p.terms()) pts.push_back(t.exp);
  auto lex_less = [](const Exponent& a, const Exponent& b) {
    return a.e1 != b.e1 ? a.e1 < b.e1 : a.e2 < b.e2;
  };
  std::sort(pts.begin(), pts.end(), lex_less);
  if (pts.size() <= 2) return pts;

  auto cross = [](const Exponent& o, const Exponent& a, const Exponent& b) {
    // Exponents of interest are far below 2^31, so the products fit.
    return (a.e1 - o.e1) * (b.e2 - o.e2) - (a.e2 - o.e2) * (b.e1 - o.e1);
  };
  // Andrew's monotone chain: lower hull left to right, then upper hull back.
  std::vector<Exponent> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& pt : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0) --k;
    hull[k++] = pt;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace kronecker
