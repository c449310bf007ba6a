#include "berndt/conjecture.hpp"

#include "berndt/berndt_integrals.hpp"
#include "berndt/errors.hpp"

namespace berndt {

namespace {

std::pair<Rational, Rational> split(const ClosedFormValue& value, int p, const char* label) {
  const MonomialKey low{8 * p, -4 * p, false};
  const MonomialKey high{8 * p + 8, -2 * (2 * p + 4), false};
  for (const auto& [key, c] : value.terms()) {
    if (key != low && key != high) {
      throw UnexpectedMonomial(std::string(label) + " integral for p = " + std::to_string(p) +
                               " has a term in " + to_string(key));
    }
  }
  return {value.coefficient(low), value.coefficient(high)};
}

}  // namespace

CoefficientQuadruple coefficients(int p) {
  if (p < 1) throw InvalidArgument("coefficients need p >= 1");
  CoefficientQuadruple q;
  q.p = p;
  std::tie(q.i, q.j) = split(integral_closed_form(IntegralKind::MINUS2, p), p, "MINUS2");
  std::tie(q.g, q.h) = split(integral_closed_form(IntegralKind::PLUS2, p), p, "PLUS2");
  return q;
}

std::vector<ConjectureEntry> conjecture_check(int p_max) {
  if (p_max < 1) throw InvalidArgument("conjecture check needs p_max >= 1");
  std::vector<ConjectureEntry> out;
  for (int p = 1; p <= p_max; ++p) {
    ConjectureEntry e;
    e.values = coefficients(p);
    const Rational scale = pow2(2 * p - 1);
    const int sign = p % 2 == 0 ? 1 : -1;
    e.g_relation_ok = e.values.g == -(scale - sign) / scale * e.values.i;
    e.h_relation_ok = e.values.h == -(scale + sign) / scale * e.values.j;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace berndt
