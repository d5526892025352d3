#pragma once

// JSON form of polynomials:
//   {"nvars":4,"terms":[{"x":[2,2,0,0],"mu":[2,1],"c":"-1"}]}
// Terms appear in canonical order; coefficients are signed decimal strings.

#include <json.hpp>

#include "schubcalc/poly.hpp"

namespace schubcalc {

nlohmann::json poly_to_json(const Poly& f);
Poly poly_from_json(const nlohmann::json& j);

}  // namespace schubcalc
