#pragma once

#include <string>

#include <json.hpp>

#include "kronecker/canonical.hpp"
#include "kronecker/grassmannian.hpp"
#include "kronecker/laurent.hpp"
#include "kronecker/quiver.hpp"

namespace kronecker {

using Json = nlohmann::ordered_json;

/// {"terms":[{"e1":int,"e2":int,"c":"decimal"}]} in canonical term order.
Json laurent_to_json(const LaurentPoly& p);
/// Inverse of laurent_to_json. Throws std::invalid_argument on malformed
/// input, repeated exponents or zero coefficients.
LaurentPoly laurent_from_json(const Json& j);

/// {"b":B,"d":[d1,d2],"maps":[[["rational", ...], ...], ...]}; each map is a
/// list of d2 rows.
Json rep_to_json(const QuiverRep& m);
QuiverRep rep_from_json(const Json& j);

/// {"kind":..,"n":..,"b":..,"d":[..],"provenance":..,"entries":[{"e1","e2","chi"}]}.
Json chi_table_to_json(const ChiTable& t);

/// {"tag":"cluster-monomial","m","p","q"} or {"tag":"z","n"}.
Json basis_tag_to_json(const BasisTagValue& tag);

/// Serialization used by the CLI: two-space indentation, trailing newline.
std::string dump(const Json& j);

}  // namespace kronecker
