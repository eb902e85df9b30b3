#pragma once

#include <json.hpp>

#include "spinwreath/scalars.hpp"

namespace spinwreath {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j);
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// {"N": int, "coeffs": [[num, den], ...]}
Json cyc_to_json(const CycScalar& a);
CycScalar cyc_from_json(const Json& j);

}  // namespace spinwreath
