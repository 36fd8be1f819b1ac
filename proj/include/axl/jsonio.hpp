#pragma once

#include <string>

#include "axl/catalog.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace axl {

using Json = nlohmann::json;

// Algebra JSON schema:
// { "basis": [labels], "char": p,
//   "field": {"trans": [...], "ext": [{"name":..., "square": expr}...]},
//   "params": {name: expr}, "family": tag,
//   "products": [[i, j, [expr per k]], ...]   (omitted pairs are zero),
//   "form": [[expr]...], "axes": [[expr per coord], ...], "gens": [i, j] }
Json algebra_to_json(const BuildResult& br);
BuildResult algebra_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, const DescP& d);

std::string fe_to_string(const FieldElem& x);

}  // namespace axl
