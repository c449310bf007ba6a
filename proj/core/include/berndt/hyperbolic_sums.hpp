#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "berndt/closed_form.hpp"
#include "berndt/elliptic_expr.hpp"
#include "berndt/hpreal.hpp"

namespace berndt {

// Series families, with u = 2n + 1 summed over n >= 0 and n over n >= 1:
//   SINH2          n^s / sinh^2(n y)                 s even >= 0
//   COSH_SINH3     n^s cosh(n y) / sinh^3(n y)       s odd >= 1
//   COSH2          u^s / cosh^2(u y / 2)             s even >= 0
//   SINH_COSH3     u^s sinh(u y / 2) / cosh^3(u y / 2)   s odd >= 1
//   ALT_EXP_MINUS  (-1)^n u^(2m) / (e^(u y) - 1)     m >= 0
//   ALT_EXP_PLUS   (-1)^n u^(2m) / (e^(u y) + 1)     m >= 0
//   ALT_SINH2      (-1)^n u^s / sinh^2(u y / 2)      s odd >= 1
//   ALT_COSH2      (-1)^n u^s / cosh^2(u y / 2)      s odd >= 1
//   FERMI          u^(2m-1) / (e^(u y) + 1)          m >= 1
enum class Family {
  SINH2,
  COSH_SINH3,
  COSH2,
  SINH_COSH3,
  ALT_EXP_MINUS,
  ALT_EXP_PLUS,
  ALT_SINH2,
  ALT_COSH2,
  FERMI,
};

inline constexpr Family kAllFamilies[] = {
    Family::SINH2,        Family::COSH_SINH3, Family::COSH2,     Family::SINH_COSH3, Family::ALT_EXP_MINUS,
    Family::ALT_EXP_PLUS, Family::ALT_SINH2,  Family::ALT_COSH2, Family::FERMI,
};

// The exponent is s for the power families and m for ALT_EXP_* and FERMI.
struct SumFamily {
  Family family;
  int exponent;

  friend bool operator==(const SumFamily&, const SumFamily&) = default;
};

std::string_view family_name(Family family);
// Case-insensitive; accepts the enumerator names.
std::optional<Family> parse_family(std::string_view name);
std::string to_string(const SumFamily& sum);

// Whether the exponent has the parity and range the family is defined for.
bool is_admissible(const SumFamily& sum);
// Admissible exponents up to max_exponent, in increasing order.
std::vector<int> admissible_exponents(Family family, int max_exponent);

// The sum as an expression in x, z, z', ... valid for every modulus.
// Throws UnsupportedFamilyExponent for COSH2 with s = 0 and SINH_COSH3 with
// s = 1 (no expression in x is available) and for inadmissible exponents.
EllipticExpr sum_symbolic(const SumFamily& sum);

// How expressions are specialized to x = 1/2.
enum class EvalRoute {
  Direct,       // every jet z^(j) evaluated from its own closed value
  ReducedJets,  // jets of order >= 2 first eliminated by the differential equation of z
};

// Exact value at y = pi. SINH2, COSH_SINH3, ALT_* and FERMI specialize
// sum_symbolic; COSH2 and SINH_COSH3 use the closed formulas in the values
// of q_m, q_m', q_m'' at 1/2, which also cover COSH2 s = 0 and SINH_COSH3 s = 1.
ClosedFormValue sum_closed_form(const SumFamily& sum, EvalRoute route = EvalRoute::Direct);

// Direct summation at y = pi (or the given y > 0) with a certified tail;
// absolute error below 2^-prec.
HPReal sum_numeric(const SumFamily& sum, long prec);
HPReal sum_numeric_at(const SumFamily& sum, const HPReal& y, long prec);

// 4 sum_{n>=1} n / (e^(2 n y) - 1)
HPReal zucker_exp_sum(const HPReal& y, long prec);
// sum_{n>=0} (-1)^n (2n+1)^s / cosh((2n+1) pi / 2)
HPReal alternating_sech_sum(int s, long prec);
// sum_{n>=1} (-1)^(n+1) n^a / sinh(n pi)
HPReal alternating_csch_sum(int a, long prec);

// Monomials the closed form may contain for SINH2, COSH_SINH3, COSH2 and
// SINH_COSH3 (the sharp membership statements); nullopt for other families.
std::optional<std::vector<MonomialKey>> predicted_support(const SumFamily& sum);

// Coefficients of the normalized forms at y = pi:
//   SINH2(4m-2)      = alpha Gamma^8m / pi^6m       [- 1/(8 pi^2) for m = 1]
//   SINH2(4m)        = alpha Gamma^8m / pi^(6m+1)
//   COSH_SINH3(4m-1) = beta Gamma^8m / pi^(6m+1)    + gamma / pi^3
//   COSH_SINH3(4m+1) = beta Gamma^(8m+8) / pi^(6m+6) + gamma Gamma^8m / pi^(6m+2)
// with Gamma = Gamma(1/4). alpha for even k >= 2, beta/gamma for odd k >= 3.
Rational alpha_coefficient(int k, EvalRoute route = EvalRoute::Direct);
Rational beta_coefficient(int k, EvalRoute route = EvalRoute::Direct);
Rational gamma_coefficient(int k, EvalRoute route = EvalRoute::Direct);

}  // namespace berndt
