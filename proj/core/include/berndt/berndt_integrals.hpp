#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "berndt/closed_form.hpp"
#include "berndt/hpreal.hpp"

namespace berndt {

// Integrands on (0, inf):
//   PLUS2   x^a / (cos x + cosh x)^2
//   MINUS2  x^a / (cos x - cosh x)^2    a >= 5
//   PLUS1   x^a / (cos x + cosh x)
//   MINUS1  x^a / (cos x - cosh x)      a >= 2
enum class IntegralKind { PLUS2, MINUS2, PLUS1, MINUS1 };

std::string_view kind_name(IntegralKind kind);
std::optional<IntegralKind> parse_kind(std::string_view name);

struct IntegralSpec {
  IntegralKind kind;
  int a;
};

// Exact value of the integral of x^(4p+1) for PLUS2 (p >= 0) or MINUS2
// (p >= 1). MINUS2 is assembled from the SINH2(4p) and COSH_SINH3(4p+1)
// closed forms; PLUS2 from q_4p(1/2) and q_4p''(1/2).
// Throws UnsupportedExponent outside those ranges or for other kinds.
ClosedFormValue integral_closed_form(IntegralKind kind, int p);

// MINUS2 value rebuilt from the alpha/beta/gamma coefficients computed
// through the jet-reduced evaluation route.
ClosedFormValue minus2_from_coefficients(int p);

struct IntegralResult {
  HPReal value;
  HPReal error_estimate;  // sum of the per-panel quadrature deltas
  HPReal tail_bound;      // certified bound on the integral over (T, inf)
  long T = 0;
  int panels = 0;
};

// Composite tanh-sinh quadrature over [0, T] plus an exponential tail
// majorant; absolute error target 2^-prec.
IntegralResult integral_numeric(const IntegralSpec& spec, long prec);

enum class Relation { THM42, THM43, EQ_ONE, EQ_MINUS_ONE };

std::string_view relation_name(Relation which);
std::optional<Relation> parse_relation(std::string_view name);

// Both sides of an integral/series relation evaluated numerically:
//   THM42  (1 - i^(a+1)) / (pi^a (1+i)^(a-1)) int x^a/(cos x + cosh x)^2
//          = 2 pi sum t^a sinh(t pi)/cosh^3(t pi) - a sum t^(a-1)/cosh^2(t pi),
//          t = n - 1/2, for odd a >= 1
//   THM43  same factor with (cos x - cosh x)^2
//          = a sum n^(a-1)/sinh^2(n pi) - 2 pi sum n^a cosh(n pi)/sinh^3(n pi), odd a >= 5
//   EQ_ONE  2 int x^(2a+1)/(cos x + cosh x) = pi^(2a+2) i^a / 2^a sum (-1)^n (2n+1)^(2a+1) / cosh((2n+1) pi/2),
//          even a >= 0
//   EQ_MINUS_ONE  (1 + i^(a+1)) int x^a/(cos x - cosh x)
//          = 2i (1+i)^(a-1) pi^(a+1) sum (-1)^(n+1) n^a / sinh(n pi), 2 <= a <= 5
struct RelationReport {
  Relation which;
  int a;
  HPComplex lhs;
  HPComplex rhs;
  HPReal abs_delta;  // max over real and imaginary parts
  std::string statement;
};

RelationReport relation_check(Relation which, int a, long prec);

}  // namespace berndt
