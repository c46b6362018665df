#pragma once

#include <json.hpp>

#include "asg/algebra/cyclotomic.hpp"

namespace asg {

/// Integers that fit in int64 are JSON numbers, larger ones decimal strings.
nlohmann::json integer_to_json(const Integer& v);
Integer integer_from_json(const nlohmann::json& j);

/// {"variable":"t","ring":{"kind":"integer"},"coefficients":[c0,c1,...]}
nlohmann::json poly_to_json(const IntPoly& p);

/// Cyclotomic ring of the given order; each coefficient is its power-basis
/// vector of length phi(order). Demotes to the integer form when order is 1.
nlohmann::json poly_to_json(const CycPoly& p, int order);

IntPoly int_poly_from_json(const nlohmann::json& j);
CycPoly cyc_poly_from_json(const nlohmann::json& j);

}  // namespace asg
