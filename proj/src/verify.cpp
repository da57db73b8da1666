#include "kronecker/verify.hpp"

#include <chrono>
#include <map>
#include <random>

#include "kronecker/canonical.hpp"
#include "kronecker/chebyshev.hpp"
#include "kronecker/cluster.hpp"
#include "kronecker/grassmannian.hpp"
#include "kronecker/quiver.hpp"

namespace kronecker {

namespace {

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  void equal(const LaurentPoly& expected, const LaurentPoly& actual, const std::string& id) {
    ++report_.cases;
    if (expected != actual) report_.failures.push_back({id, expected.to_string(), actual.to_string()});
  }

  void equal(const Integer& expected, const Integer& actual, const std::string& id) {
    ++report_.cases;
    if (expected != actual) report_.failures.push_back({id, expected.get_str(), actual.get_str()});
  }

  void equal(DimVector expected, DimVector actual, const std::string& id) {
    ++report_.cases;
    if (expected != actual) report_.failures.push_back({id, expected.to_string(), actual.to_string()});
  }

  void holds(bool condition, const std::string& id) {
    ++report_.cases;
    if (!condition) report_.failures.push_back({id, "true", "false"});
  }

  // Runs body, recording an unexpected exception as a failure of case id.
  template <typename F>
  void guarded(const std::string& id, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++report_.cases;
      report_.failures.push_back({id, "no exception", e.what()});
    }
  }

 private:
  VerifyReport& report_;
};

std::string tag(const std::string& name, std::int64_t v) { return name + "=" + std::to_string(v); }

void suite_recursion_vs_closed(Recorder& rec, int max_n) {
  ClusterContext ctx(2);
  for (std::int64_t m = -max_n; m <= max_n + 3; ++m) {
    if (m == 1 || m == 2) continue;
    rec.guarded(tag("m", m), [&] { rec.equal(x_closed_form(m), ctx.cluster_var(m), tag("m", m)); });
  }
}

void suite_canonical(Recorder& rec, int max_n) {
  const LaurentPoly z = z1();
  ClusterContext ctx(2);
  rec.equal(z, ctx.cluster_var(0) * ctx.cluster_var(3) - ctx.cluster_var(1) * ctx.cluster_var(2), "z1=x0x3-x1x2");
  rec.equal(z, s_elem(1), "z1=s1");
  rec.equal(z, z_elem(1), "z1=z_1");
  for (std::int64_t n = 1; n <= max_n; ++n) {
    const std::string id = tag("n", n);
    rec.equal(z * s_elem(n) - s_elem(n - 1), s_elem(n + 1), "s-recursion " + id);
    if (n >= 2) rec.equal(s_elem(n) - s_elem(n - 2), z_elem(n), "z=s-s " + id);
    // P_n and S_n as polynomials in x1, composed with z1 through substitute.
    auto as_poly = [](const std::vector<Integer>& coeffs) {
      std::vector<Term> terms;
      for (std::size_t k = 0; k < coeffs.size(); ++k) terms.push_back({{static_cast<std::int64_t>(k), 0}, coeffs[k]});
      return LaurentPoly::from_terms(std::move(terms));
    };
    rec.equal(substitute(as_poly(cheb_p_coeffs(n)), z, LaurentPoly::x2()), z_elem(n), "z=P_n(z1) " + id);
    rec.equal(substitute(as_poly(cheb_s_coeffs(n)), z, LaurentPoly::x2()), s_elem(n), "s=S_n(z1) " + id);
    rec.holds(is_positive(s_elem(n)) && is_positive(z_elem(n)), "positive s,z " + id);
  }
  for (std::int64_t m = -max_n; m <= max_n + 3; ++m) {
    if (m == 1 || m == 2) continue;
    rec.holds(is_positive(x_closed_form(m)), "positive x " + tag("m", m));
  }
}

void suite_chi_triple(Recorder& rec, int max_n) {
  for (RepKind kind : {RepKind::preprojective, RepKind::regular}) {
    for (int n = 0; n <= max_n; ++n) {
      const DimVector d = kind_dimension(kind, n);
      for (int p = 0; p <= d.d2 + 1; ++p) {
        for (int r = 0; r <= d.d1 + 1; ++r) {
          rec.equal(chi_z_closed(kind, n, p, r), chi_z_cellcount(kind, n, p, r),
                    to_string(kind) + " Z " + tag("n", n) + " " + tag("p", p) + " " + tag("r", r));
        }
      }
    }
  }
  for (RepKind kind : {RepKind::preprojective, RepKind::preinjective, RepKind::regular}) {
    for (int n = 0; n <= max_n; ++n) {
      const ChiTable closed = chi_table(kind, n, ChiRoute::closed_form);
      const ChiTable oracle = chi_table(kind, n, ChiRoute::coordinate_oracle);
      for (const auto& [e, chi] : closed.entries) {
        rec.equal(chi, oracle.at(e), to_string(kind) + " chi_e " + tag("n", n) + " e=" + e.to_string());
      }
      rec.equal(Integer(1), closed.at({0, 0}), to_string(kind) + " chi_0 " + tag("n", n));
      rec.equal(Integer(1), closed.at(closed.dim), to_string(kind) + " chi_d " + tag("n", n));
    }
  }
}

void suite_subsets(Recorder& rec, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const SubsetTally tally = enumerate_subsets(n);
    for (int r = 0; r <= n; ++r) {
      for (int t = 0; t <= n; ++t) {
        const std::string id = tag("n", n) + " " + tag("r", r) + " " + tag("t", t);
        rec.equal(count_subsets_by_c(n, r, t), Integer(static_cast<long>(tally.by_c[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)])), "c " + id);
        rec.equal(count_subsets_by_c_minus_eps(n, r, t),
                  Integer(static_cast<long>(tally.by_c_minus_eps[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)])), "c-eps " + id);
      }
    }
  }
}

QuiverRep random_rep(std::mt19937_64& rng, int b) {
  std::uniform_int_distribution<int> dim(0, 3);
  std::uniform_int_distribution<long> entry(-2, 2);
  std::bernoulli_distribution sparse(0.4);
  const std::int64_t d1 = dim(rng);
  const std::int64_t d2 = dim(rng);
  std::vector<RationalMatrix> maps;
  for (int k = 0; k < b; ++k) {
    RationalMatrix phi(d2, d1);
    for (std::int64_t i = 0; i < d2; ++i) {
      for (std::int64_t j = 0; j < d1; ++j) phi(i, j) = sparse(rng) ? 0 : entry(rng);
    }
    maps.push_back(std::move(phi));
  }
  return QuiverRep(b, d1, d2, std::move(maps));
}

void suite_functors(Recorder& rec, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 60; ++trial) {
    const int b = 2 + trial % 3;
    const QuiverRep m = random_rep(rng, b);
    const QuiverRep n = random_rep(rng, b);
    const std::string id = tag("trial", trial) + " " + tag("b", b) + " dim=" + m.dim().to_string();
    rec.holds(dual(dual(m)) == m, "D^2 " + id);
    const QuiverRep minus = t_minus(m);
    const QuiverRep conjugated = dual(t_plus(dual(m)));
    rec.equal(minus.dim(), conjugated.dim(), "T- = DT+D dim " + id);
    rec.holds(rank(minus.phi_column()) == rank(conjugated.phi_column()) &&
                  rank(minus.phi_row()) == rank(conjugated.phi_row()),
              "T- = DT+D rank " + id);
    if (phi_c_injective(m)) {
      rec.equal(reflect(reflect(m.dim(), Reflection::s1, b), Reflection::sigma, b), t_plus(m).dim(),
                "dim T+ " + id);
    }
    rec.holds(check_equiv_conditions(m).consistent(), "equivalent conditions " + id);
    const QuiverRep sum = t_plus(direct_sum(m, n));
    const QuiverRep pm = t_plus(m);
    const QuiverRep pn = t_plus(n);
    rec.equal(pm.dim() + pn.dim(), sum.dim(), "T+ additive dim " + id);
    rec.holds(rank(sum.phi_column()) == rank(pm.phi_column()) + rank(pn.phi_column()) &&
                  rank(sum.phi_row()) == rank(pm.phi_row()) + rank(pn.phi_row()),
              "T+ additive rank " + id);
  }
  for (int b = 2; b <= 4; ++b) {
    rec.holds(t_plus(simple(b, 1)).is_zero(), "T+S1=0 " + tag("b", b));
    rec.holds(t_minus(simple(b, 2)).is_zero(), "T-S2=0 " + tag("b", b));
    for (std::int64_t k = 0; k <= max_n; ++k) {
      for (std::int64_t m : {-k, k + 3}) {
        if (!build_M_within_limit(b, m)) continue;
        rec.guarded("build_M " + tag("b", b) + " " + tag("m", m),
                    [&] { rec.equal(alpha(b, m), build_M(b, m).dim(), "build_M " + tag("b", b) + " " + tag("m", m)); });
      }
    }
  }
  for (int k = 0; k <= max_n; ++k) {
    rec.holds(find_isomorphism(build_M(2, -k), build_preprojective_explicit(k)).has_value(),
              "M(-n) iso explicit " + tag("n", k));
    rec.holds(find_isomorphism(build_M(2, k + 3), build_preinjective_explicit(k)).has_value(),
              "M(n+3) iso explicit " + tag("n", k));
  }
}

LaurentPoly random_poly(std::mt19937_64& rng, int spread) {
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<std::int64_t> exponent(-spread, spread);
  std::uniform_int_distribution<long> coeff(-20, 20);
  std::bernoulli_distribution huge(0.2);
  std::vector<Term> terms;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    Integer c = coeff(rng);
    if (huge(rng)) {
      Integer scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, 30);
      c *= scale;
    }
    terms.push_back({{exponent(rng), exponent(rng)}, c});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

void suite_laurent(Recorder& rec, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> shift(-max_n, max_n);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly p = random_poly(rng, max_n);
    const LaurentPoly q = random_poly(rng, max_n);
    const LaurentPoly r = random_poly(rng, max_n);
    const std::string id = tag("trial", trial);
    rec.equal((p + q) + r, p + (q + r), "add assoc " + id);
    rec.equal(p + q, q + p, "add comm " + id);
    rec.equal((p * q) * r, p * (q * r), "mul assoc " + id);
    rec.equal(p * q, q * p, "mul comm " + id);
    rec.equal(p * (q + r), p * q + p * r, "distrib " + id);
    rec.equal(LaurentPoly(), p - p, "p-p " + id);
    rec.equal(p, substitute(p, LaurentPoly::x1(), LaurentPoly::x2()), "substitute identity " + id);
    if (!q.is_zero()) {
      rec.guarded("div_exact " + id, [&] { rec.equal(p, div_exact(p * q, q), "div_exact " + id); });
    }
    if (!p.is_zero()) {
      const LaurentPoly mono = LaurentPoly::monomial(3, {shift(rng), shift(rng)});
      rec.equal(denominator_vector(p) + denominator_vector(mono), denominator_vector(p * mono),
                "denominator monomial " + id);
    }
  }
}

void suite_tplus_identity(Recorder& rec, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    rec.holds(verify_tplus_identity(n, false), "identity " + tag("n", n));
    rec.holds(!verify_tplus_identity(n, true), "perturbed control " + tag("n", n));
  }
}

void suite_f_bridge(Recorder& rec, int max_n) {
  ClusterContext ctx(2);
  for (std::int64_t n = 0; n <= max_n; ++n) {
    const auto big = static_cast<int>(2 * n + 1);
    rec.equal(f_poly_specialized(big, 0), ctx.cluster_var(-n).shifted({n, n + 1}), "x_-n " + tag("n", n));
    rec.equal(f_poly_specialized(big, 1), ctx.cluster_var(n + 3).shifted({n + 1, n}), "x_n+3 " + tag("n", n));
    rec.equal(f_poly_specialized(big + 1, 0), s_elem(n + 1).shifted({n + 1, n + 1}), "s_n+1 " + tag("n", n));
  }
}

const std::map<std::string, int>& default_bounds() {
  static const std::map<std::string, int> bounds = {
      {"recursion-vs-closed", 25}, {"canonical", 25}, {"chi-triple", 10},    {"subsets", 16},
      {"functors", 6},             {"laurent", 4},    {"tplus-identity", 5}, {"f-bridge", 10},
  };
  return bounds;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"recursion-vs-closed", "canonical", "chi-triple", "subsets",
                                                 "functors", "laurent", "tplus-identity", "f-bridge"};
  return names;
}

VerifyReport run_suite(const std::string& suite, const VerifyOptions& options) {
  const auto& bounds = default_bounds();
  auto it = bounds.find(suite);
  if (it == bounds.end()) throw UnknownSuite("unknown verification suite '" + suite + "'");
  const int max_n = options.max_n.value_or(it->second);
  if (max_n < 0) throw std::invalid_argument("--max-n must be nonnegative");

  VerifyReport report;
  report.suite = suite;
  Recorder rec(report);
  const auto start = std::chrono::steady_clock::now();
  rec.guarded(suite, [&] {
    if (suite == "recursion-vs-closed") suite_recursion_vs_closed(rec, max_n);
    else if (suite == "canonical") suite_canonical(rec, max_n);
    else if (suite == "chi-triple") suite_chi_triple(rec, max_n);
    else if (suite == "subsets") suite_subsets(rec, max_n);
    else if (suite == "functors") suite_functors(rec, max_n, options.seed);
    else if (suite == "laurent") suite_laurent(rec, max_n, options.seed);
    else if (suite == "tplus-identity") suite_tplus_identity(rec, max_n);
    else if (suite == "f-bridge") suite_f_bridge(rec, max_n);
  });
  report.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void explore(std::int64_t b, std::int64_t m_lo, std::int64_t m_hi,
             const std::function<void(const ExploreRecord&)>& sink) {
  if (b < 2) throw std::invalid_argument("explore: b must be at least 2");
  ClusterContext ctx(b);
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    if (m == 1 || m == 2) continue;
    const auto start = std::chrono::steady_clock::now();
    const LaurentPoly x = ctx.cluster_var(m);
    ExploreRecord rec;
    rec.b = b;
    rec.m = m;
    rec.denominator = denominator_vector(x);
    rec.term_count = x.size();
    rec.min_coeff = x.terms().front().coeff;
    rec.max_coeff = rec.min_coeff;
    for (const auto& t : x.terms()) {
      if (t.coeff < rec.min_coeff) rec.min_coeff = t.coeff;
      if (t.coeff > rec.max_coeff) rec.max_coeff = t.coeff;
    }
    rec.positive = is_positive(x);
    rec.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    sink(rec);
  }
}

}  // namespace kronecker
