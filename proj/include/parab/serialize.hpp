#pragma once

#include <json.hpp>

#include "parab/laurent.hpp"
#include "parab/unipoly.hpp"

namespace parab {

using Json = nlohmann::ordered_json;

// ascending coefficient list, each entry a canonical "num/den" string
Json poly_to_json(const UniPoly& p);
UniPoly poly_from_json(const Json& j);

// sorted [u_exp, v_exp, re, im] quadruples; coefficients must fit int64
Json laurent_to_json(const LaurentBiPoly& p);
LaurentBiPoly laurent_from_json(const Json& j);

}  // namespace parab
