#pragma once

#include <nlohmann/json.hpp>

#include "berndt/closed_form.hpp"
#include "berndt/elliptic_expr.hpp"
#include "berndt/poly.hpp"

namespace berndt {

// Stable JSON shapes, terms in canonical key order:
//   ClosedFormValue: [{"coeff": "p/q", "gamma_exp": a, "pi_half_exp": b, "sqrt2": bool}]
//   EllipticExpr:    [{"coeff_num": ["p/q", ...], "coeff_den": [...], "r_exp": e, "jets": [...]}]
// Polynomial arrays run from the constant term upward.
nlohmann::json to_json(const Poly& poly);
nlohmann::json to_json(const ClosedFormValue& value);
nlohmann::json to_json(const EllipticExpr& expr);

Poly poly_from_json(const nlohmann::json& j);
ClosedFormValue closed_form_from_json(const nlohmann::json& j);
EllipticExpr elliptic_expr_from_json(const nlohmann::json& j);

}  // namespace berndt
