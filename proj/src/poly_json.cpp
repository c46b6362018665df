#include "asg/poly_json.hpp"

#include <limits>

namespace asg {

nlohmann::json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  throw ValidationError("polynomial coefficient must be an integer or a decimal string");
}

nlohmann::json poly_to_json(const IntPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(integer_to_json(c));
  return {{"variable", "t"}, {"ring", {{"kind", "integer"}}}, {"coefficients", coeffs}};
}

nlohmann::json poly_to_json(const CycPoly& p, int order) {
  if (order == 1) return poly_to_json(to_integer_poly(p));
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coefficients()) {
    nlohmann::json v = nlohmann::json::array();
    const CycInt value = c.promoted(order);
    for (const auto& x : value.coefficients()) v.push_back(integer_to_json(x));
    coeffs.push_back(v);
  }
  return {{"variable", "t"}, {"ring", {{"kind", "cyclotomic"}, {"order", order}}}, {"coefficients", coeffs}};
}

IntPoly int_poly_from_json(const nlohmann::json& j) {
  if (j.at("ring").at("kind") != "integer") throw ValidationError("expected an integer polynomial");
  std::vector<Integer> c;
  for (const auto& v : j.at("coefficients")) c.push_back(integer_from_json(v));
  return IntPoly(std::move(c));
}

CycPoly cyc_poly_from_json(const nlohmann::json& j) {
  if (j.at("ring").at("kind") == "integer") return to_cyc_poly(int_poly_from_json(j));
  const int order = j.at("ring").at("order").get<int>();
  std::vector<CycInt> c;
  for (const auto& v : j.at("coefficients")) {
    std::vector<Integer> basis;
    for (const auto& x : v) basis.push_back(integer_from_json(x));
    c.emplace_back(order, std::move(basis));
  }
  return CycPoly(std::move(c));
}

}  // namespace asg
