#pragma once

#include <json.hpp>

#include "pbm/ext_int.hpp"
#include "pbm/grid.hpp"
#include "pbm/instance.hpp"

namespace pbm::json {

using nlohmann::json;

// Integers stay numbers; infinities are the strings "-inf" / "+inf".
json to_json(ExtInt x);
ExtInt ext_from_json(const json& j);

json to_json(const IntMatrix& m);
json to_json(const ExtMatrix& m);
json to_json(const SubsetMask& x);

IntMatrix int_matrix_from_json(const json& j);
ExtMatrix ext_matrix_from_json(const json& j);
// Accepts booleans or 0/1 integers.
SubsetMask mask_from_json(const json& j);

/// Parses an instance document: keys "m","n","phi1","gamma1","phi2","gamma2",
/// optional "f","g" (default all "-inf"/"+inf") and "alpha","beta" (default
/// "-inf"/"+inf"). The result is validated.
PbmInstance instance_from_json(const json& j);
json to_json(const PbmInstance& inst);

}  // namespace pbm::json
