#include "kronecker/serialize.hpp"

#include <stdexcept>

namespace kronecker {

namespace {

Integer parse_integer(const Json& j, const char* what) {
  if (!j.is_string()) throw std::invalid_argument(std::string(what) + " must be a decimal string");
  Integer v;
  if (v.set_str(j.get<std::string>(), 10) != 0) {
    throw std::invalid_argument(std::string(what) + " is not a decimal integer: " + j.get<std::string>());
  }
  return v;
}

Rational parse_rational(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("matrix entry must be a rational string");
  Rational v;
  if (v.set_str(j.get<std::string>(), 10) != 0 || v.get_den() == 0) {
    throw std::invalid_argument("matrix entry is not a rational: " + j.get<std::string>());
  }
  v.canonicalize();
  return v;
}

std::int64_t parse_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace

Json laurent_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json term;
    term["e1"] = t.exp.e1;
    term["e2"] = t.exp.e2;
    term["c"] = t.coeff.get_str();
    terms.push_back(std::move(term));
  }
  Json out;
  out["terms"] = std::move(terms);
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw std::invalid_argument("Laurent polynomial JSON needs a \"terms\" array");
  }
  std::vector<Term> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_object()) throw std::invalid_argument("each term must be an object");
    Term term{{parse_int(t.at("e1"), "e1"), parse_int(t.at("e2"), "e2")}, parse_integer(t.at("c"), "c")};
    if (term.coeff == 0) throw std::invalid_argument("zero coefficient in term list");
    terms.push_back(std::move(term));
  }
  const std::size_t count = terms.size();
  LaurentPoly p = LaurentPoly::from_terms(std::move(terms));
  if (p.size() != count) throw std::invalid_argument("repeated exponent pair in term list");
  return p;
}

Json rep_to_json(const QuiverRep& m) {
  Json out;
  out["b"] = m.b();
  out["d"] = Json::array({m.d1(), m.d2()});
  Json maps = Json::array();
  for (const auto& phi : m.maps()) {
    Json rows = Json::array();
    for (std::int64_t i = 0; i < phi.rows(); ++i) {
      Json row = Json::array();
      for (std::int64_t k = 0; k < phi.cols(); ++k) row.push_back(phi(i, k).get_str());
      rows.push_back(std::move(row));
    }
    maps.push_back(std::move(rows));
  }
  out["maps"] = std::move(maps);
  return out;
}

QuiverRep rep_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("representation JSON must be an object");
  const auto b = static_cast<int>(parse_int(j.at("b"), "b"));
  const Json& d = j.at("d");
  if (!d.is_array() || d.size() != 2) throw std::invalid_argument("\"d\" must be [d1, d2]");
  const std::int64_t d1 = parse_int(d[0], "d1");
  const std::int64_t d2 = parse_int(d[1], "d2");
  std::vector<RationalMatrix> maps;
  for (const auto& rows : j.at("maps")) {
    if (!rows.is_array() || static_cast<std::int64_t>(rows.size()) != d2) {
      throw std::invalid_argument("each map must have d2 rows");
    }
    RationalMatrix phi(d2, d1);
    for (std::int64_t i = 0; i < d2; ++i) {
      const Json& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<std::int64_t>(row.size()) != d1) {
        throw std::invalid_argument("each row must have d1 entries");
      }
      for (std::int64_t k = 0; k < d1; ++k) phi(i, k) = parse_rational(row[static_cast<std::size_t>(k)]);
    }
    maps.push_back(std::move(phi));
  }
  return QuiverRep(b, d1, d2, std::move(maps));
}

Json chi_table_to_json(const ChiTable& t) {
  Json out;
  out["kind"] = t.kind ? Json(to_string(*t.kind)) : Json(nullptr);
  out["n"] = t.n;
  out["b"] = t.b;
  out["d"] = Json::array({t.dim.d1, t.dim.d2});
  out["provenance"] = to_string(t.provenance);
  Json entries = Json::array();
  for (const auto& [e, chi] : t.entries) {
    Json entry;
    entry["e1"] = e.d1;
    entry["e2"] = e.d2;
    entry["chi"] = chi.get_str();
    entries.push_back(std::move(entry));
  }
  out["entries"] = std::move(entries);
  return out;
}

Json basis_tag_to_json(const BasisTagValue& tag) {
  Json out;
  if (const auto* z = std::get_if<ZElement>(&tag)) {
    out["tag"] = "z";
    out["n"] = z->n;
    return out;
  }
  const auto& c = std::get<ClusterMonomial>(tag);
  out["tag"] = "cluster-monomial";
  out["m"] = c.m;
  out["p"] = c.p;
  out["q"] = c.q;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace kronecker
