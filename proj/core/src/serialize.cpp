#include "berndt/serialize.hpp"

#include "berndt/errors.hpp"

namespace berndt {

using nlohmann::json;

json to_json(const Poly& poly) {
  json arr = json::array();
  for (const auto& c : poly.coefficients()) arr.push_back(to_string(c));
  return arr;
}

json to_json(const ClosedFormValue& value) {
  json arr = json::array();
  for (const auto& [key, c] : value.terms()) {
    arr.push_back({{"coeff", to_string(c)},
                   {"gamma_exp", key.gamma_exp},
                   {"pi_half_exp", key.pi_half_exp},
                   {"sqrt2", key.sqrt2}});
  }
  return arr;
}

json to_json(const EllipticExpr& expr) {
  json arr = json::array();
  for (const auto& [key, c] : expr.terms()) {
    arr.push_back({{"coeff_num", to_json(c.numerator())},
                   {"coeff_den", to_json(c.denominator())},
                   {"r_exp", key.r_exp},
                   {"jets", key.jets}});
  }
  return arr;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial JSON must be an array");
  std::vector<Rational> coefficients;
  for (const auto& c : j) coefficients.push_back(parse_rational(c.get<std::string>()));
  return Poly(std::move(coefficients));
}

ClosedFormValue closed_form_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("closed-form JSON must be an array");
  ClosedFormValue v;
  for (const auto& t : j) {
    v += ClosedFormValue::monomial(parse_rational(t.at("coeff").get<std::string>()),
                                   t.at("gamma_exp").get<int>(), t.at("pi_half_exp").get<int>(),
                                   t.at("sqrt2").get<bool>());
  }
  return v;
}

EllipticExpr elliptic_expr_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("elliptic-expression JSON must be an array");
  EllipticExpr e;
  for (const auto& t : j) {
    RatFunX c(poly_from_json(t.at("coeff_num")), poly_from_json(t.at("coeff_den")));
    ExprKey key{t.at("r_exp").get<int>(), t.at("jets").get<std::vector<int>>()};
    e += EllipticExpr::term(c, std::move(key));
  }
  return e;
}

}  // namespace berndt
