#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "kronecker/canonical.hpp"
#include "kronecker/chebyshev.hpp"
#include "kronecker/cluster.hpp"
#include "kronecker/grassmannian.hpp"
#include "kronecker/quiver.hpp"
#include "kronecker/serialize.hpp"
#include "kronecker/verify.hpp"

using namespace kronecker;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;

enum class Format { text, json, csv };

struct Globals {
  Format format = Format::text;
  std::string output;
  std::uint64_t seed = 1;
  std::optional<int> max_n;
};

// Raised for argument combinations CLI11 cannot reject by itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_format(const Globals& g, std::initializer_list<Format> allowed, const char* command) {
  for (Format f : allowed) {
    if (f == g.format) return;
  }
  throw UsageError(std::string(command) + ": unsupported --format");
}

std::string csv_terms(const LaurentPoly& p) {
  std::ostringstream os;
  os << "e1,e2,c\n";
  for (const auto& t : p.terms()) os << t.exp.e1 << ',' << t.exp.e2 << ',' << t.coeff.get_str() << '\n';
  return os.str();
}

struct ClusterVarArgs {
  std::int64_t b = 2;
  std::int64_t m = 3;
};

std::string cmd_cluster_var(const Globals& g, const ClusterVarArgs& a) {
  if (a.b < 1) throw UsageError("cluster-var: --b must be positive");
  const LaurentPoly x = cluster_var(a.b, a.m);
  const DimVector d = denominator_vector(x);
  switch (g.format) {
    case Format::json: {
      Json out;
      out["b"] = a.b;
      out["m"] = a.m;
      out["denominator"] = Json::array({d.d1, d.d2});
      out["terms"] = laurent_to_json(x)["terms"];
      return dump(out);
    }
    case Format::csv:
      return csv_terms(x);
    case Format::text:
      break;
  }
  return "x_" + std::to_string(a.m) + " (b = " + std::to_string(a.b) + ") = " + x.to_string() +
         "\ndenominator = " + d.to_string() + "\n";
}

struct RepArgs {
  int b = 2;
  std::optional<std::int64_t> m;
  std::optional<int> regular;
  bool explicit_basis = false;
};

std::string cmd_rep(const Globals& g, const RepArgs& a) {
  require_format(g, {Format::text, Format::json}, "rep");
  if (a.m.has_value() == a.regular.has_value()) throw UsageError("rep: give exactly one of --m and --regular");
  std::optional<QuiverRep> rep;
  if (a.regular) {
    if (a.b != 2) throw UsageError("rep: --regular needs --b 2");
    rep = build_regular_explicit(*a.regular);
  } else if (a.explicit_basis) {
    if (a.b != 2) throw UsageError("rep: --explicit needs --b 2");
    const std::int64_t m = *a.m;
    if (m == 1 || m == 2) throw InitialClusterIndex("rep: m = " + std::to_string(m) + " is an initial cluster index");
    rep = m <= 0 ? build_preprojective_explicit(static_cast<int>(-m))
                 : build_preinjective_explicit(static_cast<int>(m - 3));
  } else {
    rep = build_M(a.b, *a.m);
  }
  if (g.format == Format::json) return dump(rep_to_json(*rep));
  return rep->to_string() + "\n";
}

struct ChiArgs {
  std::string kind = "preproj";
  int n = 0;
  std::string e;
  std::string route = "closed";
};

// Returns the text and whether all routes agreed (always true for one route).
std::pair<std::string, bool> cmd_chi(const Globals& g, const ChiArgs& a) {
  if (a.n < 0) throw UsageError("chi: --n must be nonnegative");
  const RepKind kind = parse_rep_kind(a.kind);
  std::optional<DimVector> only;
  if (!a.e.empty()) {
    DimVector e;
    char comma = 0;
    std::istringstream is(a.e);
    if (!(is >> e.d1 >> comma >> e.d2) || comma != ',' || !is.eof()) throw UsageError("chi: --e expects E1,E2");
    only = e;
  }
  std::vector<ChiTable> tables;
  if (a.route == "all") {
    for (ChiRoute r : {ChiRoute::closed_form, ChiRoute::coordinate_oracle, ChiRoute::cell_count}) {
      tables.push_back(chi_table(kind, a.n, r));
    }
  } else {
    tables.push_back(chi_table(kind, a.n, parse_chi_route(a.route)));
  }
  bool agree = true;
  for (const auto& t : tables) agree = agree && t.same_values(tables.front());

  auto selected = [&](DimVector e) { return !only || *only == e; };
  std::ostringstream os;
  switch (g.format) {
    case Format::csv:
      os << "e1,e2,chi,route\n";
      for (const auto& t : tables) {
        for (const auto& [e, chi] : t.entries) {
          if (selected(e)) os << e.d1 << ',' << e.d2 << ',' << chi.get_str() << ',' << to_string(t.provenance) << '\n';
        }
      }
      break;
    case Format::json: {
      Json out;
      out["kind"] = to_string(kind);
      out["n"] = a.n;
      out["d"] = Json::array({tables.front().dim.d1, tables.front().dim.d2});
      Json routes = Json::array();
      for (const auto& t : tables) {
        Json j = chi_table_to_json(t);
        if (only) {
          Json kept = Json::array();
          for (const auto& entry : j["entries"]) {
            if (entry["e1"] == only->d1 && entry["e2"] == only->d2) kept.push_back(entry);
          }
          j["entries"] = kept;
        }
        routes.push_back(j);
      }
      out["routes"] = routes;
      if (tables.size() > 1) out["agree"] = agree;
      os << dump(out);
      break;
    }
    case Format::text: {
      os << to_string(kind) << " n = " << a.n << ", dim = " << tables.front().dim.to_string() << '\n';
      os << "e";
      for (const auto& t : tables) os << '\t' << to_string(t.provenance);
      os << '\n';
      for (const auto& [e, chi] : tables.front().entries) {
        if (!selected(e)) continue;
        os << e.to_string();
        for (const auto& t : tables) os << '\t' << t.at(e).get_str();
        os << '\n';
      }
      if (tables.size() > 1) os << (agree ? "routes agree\n" : "routes DISAGREE\n");
      break;
    }
  }
  return {os.str(), agree};
}

struct CanonicalArgs {
  std::string kind;
  std::optional<std::int64_t> n;
  bool list = false;
  std::int64_t max_degree = 2;
};

std::string cmd_canonical(const Globals& g, const CanonicalArgs& a) {
  require_format(g, {Format::text, Format::json, Format::csv}, "canonical");
  if (a.list) {
    const auto basis = list_basis(a.max_degree);
    std::ostringstream os;
    if (g.format == Format::json) {
      Json out = Json::array();
      for (const auto& element : basis) {
        Json j = basis_tag_to_json(element.tag());
        const DimVector d = denominator_vector(element.value());
        j["denominator"] = Json::array({d.d1, d.d2});
        j["terms"] = laurent_to_json(element.value())["terms"];
        out.push_back(j);
      }
      return dump(out);
    }
    if (g.format == Format::csv) os << "element,d1,d2,terms\n";
    for (const auto& element : basis) {
      const DimVector d = denominator_vector(element.value());
      if (g.format == Format::csv) {
        os << describe(element.tag()) << ',' << d.d1 << ',' << d.d2 << ',' << element.value().size() << '\n';
      } else {
        os << describe(element.tag()) << "\tdenominator " << d.to_string() << "\t" << element.value().to_string() << '\n';
      }
    }
    return os.str();
  }
  if (a.kind.empty() || !a.n) throw UsageError("canonical: give --kind and --n, or --list");
  LaurentPoly value;
  if (a.kind == "x") value = x_closed_form(*a.n);
  else if (a.kind == "s") value = s_elem(*a.n);
  else if (a.kind == "z") value = z_elem(*a.n);
  else throw UsageError("canonical: --kind must be x, s or z");
  switch (g.format) {
    case Format::json: {
      Json out;
      out["kind"] = a.kind;
      out["n"] = *a.n;
      out["terms"] = laurent_to_json(value)["terms"];
      return dump(out);
    }
    case Format::csv:
      return csv_terms(value);
    case Format::text:
      break;
  }
  return a.kind + "_" + std::to_string(*a.n) + " = " + value.to_string() + "\n";
}

struct VerifyArgs {
  std::string suite;
};

std::pair<std::string, bool> cmd_verify(const Globals& g, const VerifyArgs& a) {
  require_format(g, {Format::text, Format::json}, "verify");
  VerifyOptions options;
  options.max_n = g.max_n;
  options.seed = g.seed;
  const VerifyReport report = run_suite(a.suite, options);
  if (g.format == Format::json) {
    Json out;
    out["suite"] = report.suite;
    out["cases"] = report.cases;
    Json failures = Json::array();
    for (const auto& f : report.failures) {
      Json j;
      j["case"] = f.case_id;
      j["expected"] = f.expected;
      j["actual"] = f.actual;
      failures.push_back(j);
    }
    out["failures"] = failures;
    out["micros"] = report.micros;
    return {dump(out), report.ok()};
  }
  std::ostringstream os;
  os << report.suite << ": " << report.cases << " cases, " << report.failures.size() << " failures, "
     << report.micros / 1000 << " ms\n";
  for (const auto& f : report.failures) {
    os << "  FAIL " << f.case_id << "\n    expected: " << f.expected << "\n    actual:   " << f.actual << '\n';
  }
  return {os.str(), report.ok()};
}

struct ExploreArgs {
  std::int64_t b = 3;
  std::int64_t m_min = 3;
  std::int64_t m_max = 8;
};

// Streams records to out; returns false if some coefficient was not positive.
bool cmd_explore(const Globals& g, const ExploreArgs& a, std::ostream& out) {
  if (a.b < 2) throw UsageError("explore: --b must be at least 2");
  bool all_positive = true;
  bool first = true;
  if (g.format == Format::json) out << "[";
  explore(a.b, a.m_min, a.m_max, [&](const ExploreRecord& r) {
    all_positive = all_positive && r.positive;
    switch (g.format) {
      case Format::csv:
        // Header only with the first record, so an empty range prints nothing.
        if (first) out << "b,m,d1,d2,terms,min_coeff,max_coeff,positive,micros\n";
        out << r.b << ',' << r.m << ',' << r.denominator.d1 << ',' << r.denominator.d2 << ',' << r.term_count << ','
            << r.min_coeff.get_str() << ',' << r.max_coeff.get_str() << ',' << (r.positive ? "true" : "false") << ','
            << r.micros << '\n';
        break;
      case Format::json: {
        Json j;
        j["b"] = r.b;
        j["m"] = r.m;
        j["denominator"] = Json::array({r.denominator.d1, r.denominator.d2});
        j["terms"] = r.term_count;
        j["min_coeff"] = r.min_coeff.get_str();
        j["max_coeff"] = r.max_coeff.get_str();
        j["positive"] = r.positive;
        j["micros"] = r.micros;
        out << (first ? "\n  " : ",\n  ") << j.dump();
        break;
      }
      case Format::text:
        out << "b = " << r.b << ", m = " << r.m << ": denominator " << r.denominator.to_string() << ", "
            << r.term_count << " terms, coefficients in [" << r.min_coeff.get_str() << ", " << r.max_coeff.get_str()
            << "], " << (r.positive ? "positive" : "NOT positive") << '\n';
        break;
    }
    first = false;
    out.flush();
  });
  if (g.format == Format::json) out << (first ? "]\n" : "\n]\n");
  return all_positive;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster variables, Kronecker quiver representations and quiver Grassmannians"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  Globals g;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", g.format, "Output format")->transform(CLI::CheckedTransformer(formats))->capture_default_str();
  app.add_option("--output", g.output, "Write output to this file instead of stdout");
  app.add_option("--seed", g.seed, "Seed for randomized verification suites")->capture_default_str();
  app.add_option("--max-n", g.max_n, "Bound used by verification suites")->check(CLI::NonNegativeNumber);

  ClusterVarArgs cv;
  auto* sc_cv = app.add_subcommand("cluster-var", "Laurent expansion of x_m in the initial cluster")->fallthrough();
  sc_cv->add_option("--b", cv.b, "Exchange exponent b")->required();
  sc_cv->add_option("--m", cv.m, "Index m")->required();

  RepArgs rp;
  auto* sc_rep = app.add_subcommand("rep", "Representation M(m) of the generalized Kronecker quiver")->fallthrough();
  sc_rep->add_option("--b", rp.b, "Number of arrows")->required()->check(CLI::Range(2, 1 << 20));
  sc_rep->add_option("--m", rp.m, "Index m (not 1 or 2)");
  sc_rep->add_option("--regular", rp.regular, "Regular representation of dimension (N, N), b = 2")->check(CLI::NonNegativeNumber);
  sc_rep->add_flag("--explicit", rp.explicit_basis, "Use the explicit basis (b = 2)");

  ChiArgs ch;
  auto* sc_chi = app.add_subcommand("chi", "Euler characteristics of quiver Grassmannians")->fallthrough();
  sc_chi->add_option("--kind", ch.kind, "preproj, preinj or regular")
      ->required()
      ->check(CLI::IsMember({"preproj", "preprojective", "preinj", "preinjective", "regular"}));
  sc_chi->add_option("--n", ch.n, "Index n")->required();
  sc_chi->add_option("--e", ch.e, "Single dimension vector E1,E2");
  sc_chi->add_option("--route", ch.route, "closed, oracle, cells or all")
      ->check(CLI::IsMember({"closed", "oracle", "cells", "all"}))
      ->capture_default_str();

  CanonicalArgs cn;
  auto* sc_can = app.add_subcommand("canonical", "Canonical basis elements (b = 2)")->fallthrough();
  sc_can->add_option("--kind", cn.kind, "x (cluster variable x_N), s or z")->check(CLI::IsMember({"x", "s", "z"}));
  sc_can->add_option("--n", cn.n, "Index");
  sc_can->add_flag("--list", cn.list, "List basis elements with denominators in a box");
  sc_can->add_option("--max-degree", cn.max_degree, "Box half-width for --list")->check(CLI::NonNegativeNumber)->capture_default_str();

  VerifyArgs vf;
  auto* sc_verify = app.add_subcommand("verify", "Run a verification suite")->fallthrough();
  sc_verify->add_option("suite", vf.suite, "Suite name")->required();

  ExploreArgs ex;
  auto* sc_explore = app.add_subcommand("explore", "Positivity evidence for x_m over a range of m")->fallthrough();
  sc_explore->add_option("--b", ex.b, "Exchange exponent b >= 2")->required();
  sc_explore->add_option("--m-min", ex.m_min, "First index")->required();
  sc_explore->add_option("--m-max", ex.m_max, "Last index")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Output out(g.output);
    if (sc_cv->parsed()) {
      out.stream() << cmd_cluster_var(g, cv);
      return kExitOk;
    }
    if (sc_rep->parsed()) {
      out.stream() << cmd_rep(g, rp);
      return kExitOk;
    }
    if (sc_chi->parsed()) {
      auto [text, agree] = cmd_chi(g, ch);
      out.stream() << text;
      return agree ? kExitOk : kExitFailure;
    }
    if (sc_can->parsed()) {
      out.stream() << cmd_canonical(g, cn);
      return kExitOk;
    }
    if (sc_verify->parsed()) {
      auto [text, ok] = cmd_verify(g, vf);
      out.stream() << text;
      return ok ? kExitOk : kExitFailure;
    }
    if (sc_explore->parsed()) {
      const bool positive = cmd_explore(g, ex, out.stream());
      if (positive) return kExitOk;
      if (ex.b == 2) {
        std::cerr << "error: non-positive coefficient for b = 2\n";
        return kExitFailure;
      }
      std::cerr << "conjecture counterexample: non-positive coefficient for b = " << ex.b << '\n';
      return kExitCounterexample;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownSuite& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InitialClusterIndex& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
