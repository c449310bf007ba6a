#include "berndt/hyperbolic_sums.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>

#include "berndt/constants.hpp"
#include "berndt/eisenstein.hpp"
#include "berndt/errors.hpp"
#include "berndt/jacobi_series.hpp"
#include "berndt/special_numbers.hpp"
#include "berndt/summation.hpp"

namespace berndt {

namespace {

const Rational kHalf = make_rational(1, 2);

EllipticExpr from_poly(const Poly& p) { return EllipticExpr(RatFunX(p)); }

int sign_power(int m) { return m % 2 == 0 ? 1 : -1; }

[[noreturn]] void unsupported(const SumFamily& sum, const char* why) {
  throw UnsupportedFamilyExponent(to_string(sum) + ": " + why);
}

// (-1)^m / (2m) * x(1-x) z^(2m+1) (z q_2m' + 2m z' q_2m), m >= 1
EllipticExpr cosh2_symbolic(int m) {
  using E = EllipticExpr;
  const Poly q = JacobiTable::shared().q(2 * m);
  E inner = E::z(0) * from_poly(q.derivative()) + E::z(1) * from_poly(q) * Rational(2 * m);
  return E::sigma() * E::z(0, 2 * m + 1) * inner * make_rational(sign_power(m), 2 * m);
}

ClosedFormValue gamma_pi(const Rational& c, int gamma_exp, int pi_exp) {
  return ClosedFormValue::monomial(c, gamma_exp, 2 * pi_exp);
}

ClosedFormValue cosh2_closed(int s) {
  auto& table = JacobiTable::shared();
  if (s % 4 == 2) {
    const int m = (s - 2) / 4;
    const Rational dq = table.q(s).derivative()(kHalf);
    return gamma_pi(-dq / (pow2(4 * m + 7) * (2 * m + 1)), 8 * m + 8, -(6 * m + 6));
  }
  const int m = s / 4;
  return gamma_pi(table.q(s)(kHalf) / pow2(4 * m + 1), 8 * m, -(6 * m + 1));
}

ClosedFormValue sinh_cosh3_closed(int s) {
  auto& table = JacobiTable::shared();
  if (s % 4 == 1) {
    const int m = (s - 1) / 4;
    const Poly q = table.q(4 * m);
    const Rational q0 = q(kHalf);
    Rational gamma8_part = 4 * q0;
    if (m > 0) gamma8_part += q.derivative().derivative()(kHalf) / m;
    const Rational scale = pow(Rational(4), -(2 * m + 5));
    return gamma_pi(scale * gamma8_part, 8 * m + 8, -(6 * m + 6)) +
           gamma_pi(scale * 256 * (4 * m + 1) * q0, 8 * m, -(6 * m + 2));
  }
  // (4m+3)/pi times COSH2(4m+2); q'_{4m+2}(1/2) < 0 keeps the value positive.
  const int m = (s - 3) / 4;
  const Rational dq = table.q(4 * m + 2).derivative()(kHalf);
  return gamma_pi(-(4 * m + 3) * dq / (pow2(4 * m + 7) * (2 * m + 1)), 8 * m + 8, -(6 * m + 7));
}

ClosedFormValue specialize(const EllipticExpr& e, EvalRoute route) {
  return route == EvalRoute::Direct ? e.eval_at_half() : e.reduce_jets().eval_at_half();
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::SINH2: return "SINH2";
    case Family::COSH_SINH3: return "COSH_SINH3";
    case Family::COSH2: return "COSH2";
    case Family::SINH_COSH3: return "SINH_COSH3";
    case Family::ALT_EXP_MINUS: return "ALT_EXP_MINUS";
    case Family::ALT_EXP_PLUS: return "ALT_EXP_PLUS";
    case Family::ALT_SINH2: return "ALT_SINH2";
    case Family::ALT_COSH2: return "ALT_COSH2";
    case Family::FERMI: return "FERMI";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (Family f : kAllFamilies) {
    if (family_name(f) == upper) return f;
  }
  return std::nullopt;
}

std::string to_string(const SumFamily& sum) {
  return std::string(family_name(sum.family)) + "(" + std::to_string(sum.exponent) + ")";
}

bool is_admissible(const SumFamily& sum) {
  const int e = sum.exponent;
  switch (sum.family) {
    case Family::SINH2:
    case Family::COSH2: return e >= 0 && e % 2 == 0;
    case Family::COSH_SINH3:
    case Family::SINH_COSH3:
    case Family::ALT_SINH2:
    case Family::ALT_COSH2: return e >= 1 && e % 2 == 1;
    case Family::ALT_EXP_MINUS:
    case Family::ALT_EXP_PLUS: return e >= 0;
    case Family::FERMI: return e >= 1;
  }
  return false;
}

std::vector<int> admissible_exponents(Family family, int max_exponent) {
  std::vector<int> out;
  for (int e = 0; e <= max_exponent; ++e) {
    if (is_admissible({family, e})) out.push_back(e);
  }
  return out;
}

EllipticExpr sum_symbolic(const SumFamily& sum) {
  using E = EllipticExpr;
  if (!is_admissible(sum)) unsupported(sum, "exponent outside the family's range");
  const int s = sum.exponent;
  auto& jacobi = JacobiTable::shared();
  switch (sum.family) {
    case Family::SINH2:
      if (s == 0) {
        // sum 1/sinh^2(ny) = 4 sum n/(e^2ny - 1) = (1 - P)/6
        return (E(1) - eisenstein_PQR().P) * make_rational(1, 6);
      }
      return phi_series(s / 2) * Rational(4);
    case Family::COSH_SINH3:
      // d/dy sum n^(s-1)/sinh^2(ny) = -2 sum n^s cosh/sinh^3
      return sum_symbolic({Family::SINH2, s - 1}).diff_y() * make_rational(-1, 2);
    case Family::COSH2:
      if (s == 0) unsupported(sum, "no expression in x; use the closed form at y = pi");
      return cosh2_symbolic(s / 2);
    case Family::SINH_COSH3:
      if (s == 1) unsupported(sum, "no expression in x; use the closed form at y = pi");
      // d/dy sum u^(s-1)/cosh^2(uy/2) = -sum u^s sinh/cosh^3
      return -cosh2_symbolic((s - 1) / 2).diff_y();
    case Family::ALT_EXP_MINUS: {
      const int m = s;
      E value = E::z(0, 2 * m + 1) * from_poly(jacobi.p(2 * m)) - E(Rational(euler_number(m)));
      return value * make_rational(sign_power(m), 4);
    }
    case Family::ALT_EXP_PLUS: {
      const int m = s;
      E value = E(Rational(euler_number(m))) - E::r() * E::z(0, 2 * m + 1) * from_poly(jacobi.f(2 * m));
      return value * make_rational(sign_power(m), 4);
    }
    case Family::ALT_SINH2: {
      const int m = (s - 1) / 2;
      const E inner = E::z(0, 2 * m + 1) * from_poly(jacobi.p(2 * m));
      return inner.diff_y() * Rational(-sign_power(m));
    }
    case Family::ALT_COSH2: {
      const int m = (s - 1) / 2;
      const E inner = E::r() * E::z(0, 2 * m + 1) * from_poly(jacobi.f(2 * m));
      return inner.diff_y() * Rational(sign_power(m));
    }
    case Family::FERMI: {
      const int m = s;
      const Rational constant = 2 * (pow2(2 * m - 1) - 1) * bernoulli(2 * m);
      E value = E::z(0, 2 * m) * from_poly(jacobi.q(2 * m)) * Rational(sign_power(m)) + E(constant);
      return value * make_rational(1, 8 * m);
    }
  }
  unsupported(sum, "unknown family");
}

ClosedFormValue sum_closed_form(const SumFamily& sum, EvalRoute route) {
  if (!is_admissible(sum)) unsupported(sum, "exponent outside the family's range");
  switch (sum.family) {
    case Family::COSH2: return cosh2_closed(sum.exponent);
    case Family::SINH_COSH3: return sinh_cosh3_closed(sum.exponent);
    default: return specialize(sum_symbolic(sum), route);
  }
}

namespace {

struct NumericPlan {
  long first = 0;
  // Lattice variable of term n (n or 2n + 1) and the bound parameters.
  bool odd_lattice = false;
  double log2_c = 0;
  double power = 0;
  double lambda = 0;  // decay rate in the lattice variable
  SeriesTerm term;
};

double log2_one_minus_exp(double t) { return std::log2(-std::expm1(-t)); }

using YAt = std::function<HPReal(long wp)>;

NumericPlan plan_for(const SumFamily& sum, const YAt& y_at) {
  const int s = sum.exponent;
  const double yd = y_at(64).to_double();
  NumericPlan plan;
  auto lattice_power = [](long u, long wp, int e) { return pow(HPReal(u, wp), e); };
  switch (sum.family) {
    case Family::SINH2:
      // 1/sinh^2 t <= 4 e^-2t / (1 - e^-2t0)^2 for t >= t0 = y
      plan = {1, false, 2 - 2 * log2_one_minus_exp(2 * yd), double(s), 2 * yd, {}};
      plan.term = [=](long n, long wp) {
        HPReal sh = sinh(y_at(wp) * n);
        return lattice_power(n, wp, s) / (sh * sh);
      };
      break;
    case Family::COSH_SINH3:
      // cosh t / sinh^3 t <= 8 e^-2t / (1 - e^-2t0)^3
      plan = {1, false, 3 - 3 * log2_one_minus_exp(2 * yd), double(s), 2 * yd, {}};
      plan.term = [=](long n, long wp) {
        HPReal t = y_at(wp) * n;
        HPReal sh = sinh(t);
        return lattice_power(n, wp, s) * cosh(t) / (sh * sh * sh);
      };
      break;
    case Family::COSH2:
      // 1/cosh^2 t <= 4 e^-2t, t = u y / 2
      plan = {0, true, 2, double(s), yd, {}};
      plan.term = [=](long n, long wp) {
        HPReal ch = cosh(y_at(wp) * (2 * n + 1) / 2);
        return lattice_power(2 * n + 1, wp, s) / (ch * ch);
      };
      break;
    case Family::SINH_COSH3:
      // sinh t / cosh^3 t <= 4 e^-2t
      plan = {0, true, 2, double(s), yd, {}};
      plan.term = [=](long n, long wp) {
        HPReal t = y_at(wp) * (2 * n + 1) / 2;
        HPReal ch = cosh(t);
        return lattice_power(2 * n + 1, wp, s) * sinh(t) / (ch * ch * ch);
      };
      break;
    case Family::ALT_EXP_MINUS:
      // 1/(e^t - 1) <= e^-t / (1 - e^-t0), t0 = y
      plan = {0, true, -log2_one_minus_exp(yd), 2.0 * s, yd, {}};
      plan.term = [=](long n, long wp) {
        HPReal v = lattice_power(2 * n + 1, wp, 2 * s) /
                   (exp(y_at(wp) * (2 * n + 1)) - HPReal(1L, wp));
        return n % 2 == 0 ? v : -v;
      };
      break;
    case Family::ALT_EXP_PLUS:
      plan = {0, true, 0, 2.0 * s, yd, {}};
      plan.term = [=](long n, long wp) {
        HPReal v = lattice_power(2 * n + 1, wp, 2 * s) /
                   (exp(y_at(wp) * (2 * n + 1)) + HPReal(1L, wp));
        return n % 2 == 0 ? v : -v;
      };
      break;
    case Family::ALT_SINH2:
      // 1/sinh^2 t <= 4 e^-2t / (1 - e^-2t0)^2, t0 = y/2
      plan = {0, true, 2 - 2 * log2_one_minus_exp(yd), double(s), yd, {}};
      plan.term = [=](long n, long wp) {
        HPReal sh = sinh(y_at(wp) * (2 * n + 1) / 2);
        HPReal v = lattice_power(2 * n + 1, wp, s) / (sh * sh);
        return n % 2 == 0 ? v : -v;
      };
      break;
    case Family::ALT_COSH2:
      plan = {0, true, 2, double(s), yd, {}};
      plan.term = [=](long n, long wp) {
        HPReal ch = cosh(y_at(wp) * (2 * n + 1) / 2);
        HPReal v = lattice_power(2 * n + 1, wp, s) / (ch * ch);
        return n % 2 == 0 ? v : -v;
      };
      break;
    case Family::FERMI:
      plan = {0, true, 0, 2.0 * s - 1, yd, {}};
      plan.term = [=](long n, long wp) {
        return lattice_power(2 * n + 1, wp, 2 * s - 1) /
               (exp(y_at(wp) * (2 * n + 1)) + HPReal(1L, wp));
      };
      break;
  }
  return plan;
}

HPReal run_plan(const NumericPlan& plan, long prec) {
  auto majorant = [&plan](long n) {
    const double u = plan.odd_lattice ? 2.0 * n + 1 : double(n);
    return log2_exp_majorant(plan.log2_c, plan.power, plan.lambda, u);
  };
  return sum_with_tail(plan.term, majorant, plan.first, prec).value;
}

}  // namespace

HPReal sum_numeric_at(const SumFamily& sum, const HPReal& y, long prec) {
  if (!is_admissible(sum)) unsupported(sum, "exponent outside the family's range");
  if (y.sign() <= 0) throw InvalidArgument("sum_numeric needs y > 0");
  return run_plan(plan_for(sum, [y](long wp) { return y.with_prec(wp); }), prec);
}

HPReal sum_numeric(const SumFamily& sum, long prec) {
  if (!is_admissible(sum)) unsupported(sum, "exponent outside the family's range");
  return run_plan(plan_for(sum, [](long wp) { return pi(wp); }), prec);
}

HPReal zucker_exp_sum(const HPReal& y, long prec) {
  const double yd = y.to_double();
  const YAt y_at = [y](long wp) { return y.with_prec(wp); };
  NumericPlan plan{1, false, 2 - log2_one_minus_exp(2 * yd), 1, 2 * yd, {}};
  plan.term = [=](long n, long wp) {
    return HPReal(4 * n, wp) / (exp(y_at(wp) * (2 * n)) - HPReal(1L, wp));
  };
  return run_plan(plan, prec);
}

HPReal alternating_sech_sum(int s, long prec) {
  // 1/cosh t <= 2 e^-t, t = u pi / 2
  NumericPlan plan{0, true, 1, double(s), M_PI / 2, {}};
  plan.term = [=](long n, long wp) {
    HPReal v = pow(HPReal(2 * n + 1, wp), s) / cosh(pi(wp) * (2 * n + 1) / 2);
    return n % 2 == 0 ? v : -v;
  };
  return run_plan(plan, prec);
}

HPReal alternating_csch_sum(int a, long prec) {
  // 1/sinh t <= 2 e^-t / (1 - e^-2 t0), t0 = pi
  NumericPlan plan{1, false, 1 - log2_one_minus_exp(2 * M_PI), double(a), M_PI, {}};
  plan.term = [=](long n, long wp) {
    HPReal v = pow(HPReal(n, wp), a) / sinh(pi(wp) * n);
    return n % 2 == 1 ? v : -v;
  };
  return run_plan(plan, prec);
}

std::optional<std::vector<MonomialKey>> predicted_support(const SumFamily& sum) {
  if (!is_admissible(sum)) return std::nullopt;
  const int s = sum.exponent;
  auto key = [](int gamma_exp, int pi_exp) { return MonomialKey{gamma_exp, 2 * pi_exp, false}; };
  std::vector<MonomialKey> keys;
  switch (sum.family) {
    case Family::SINH2:
      if (s % 4 == 2) {
        const int m = (s + 2) / 4;
        keys.push_back(key(8 * m, -6 * m));
        if (m == 1) keys.push_back(key(0, -2));
      } else {
        const int m = (s + 4) / 4;
        keys.push_back(key(8 * m - 8, -(6 * m - 5)));
        if (m == 1) keys.push_back(key(0, 0));
      }
      break;
    case Family::COSH_SINH3:
      if (s % 4 == 3) {
        const int m = (s + 1) / 4;
        keys.push_back(key(8 * m, -(6 * m + 1)));
        if (m == 1) keys.push_back(key(0, -3));
      } else {
        const int m = (s + 3) / 4;
        keys.push_back(key(8 * m, -6 * m));
        keys.push_back(key(8 * m - 8, -(6 * m - 4)));
      }
      break;
    case Family::COSH2:
      if (s % 4 == 2) {
        const int m = (s - 2) / 4;
        keys.push_back(key(8 * m + 8, -(6 * m + 6)));
      } else {
        const int m = s / 4;
        keys.push_back(key(8 * m, -(6 * m + 1)));
      }
      break;
    case Family::SINH_COSH3:
      if (s % 4 == 1) {
        const int m = (s - 1) / 4;
        keys.push_back(key(8 * m + 8, -(6 * m + 6)));
        keys.push_back(key(8 * m, -(6 * m + 2)));
      } else {
        const int m = (s - 3) / 4;
        keys.push_back(key(8 * m + 8, -(6 * m + 7)));
      }
      break;
    default: return std::nullopt;
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

Rational alpha_coefficient(int k, EvalRoute route) {
  if (k < 2 || k % 2 != 0) throw InvalidArgument("alpha_k needs even k >= 2");
  const ClosedFormValue v = sum_closed_form({Family::SINH2, k}, route);
  if (k % 4 == 2) {
    const int m = (k + 2) / 4;
    return v.coefficient(8 * m, -12 * m);
  }
  const int m = k / 4;
  return v.coefficient(8 * m, -2 * (6 * m + 1));
}

Rational beta_coefficient(int k, EvalRoute route) {
  if (k < 3 || k % 2 != 1) throw InvalidArgument("beta_k needs odd k >= 3");
  const ClosedFormValue v = sum_closed_form({Family::COSH_SINH3, k}, route);
  if (k % 4 == 3) {
    const int m = (k + 1) / 4;
    return v.coefficient(8 * m, -2 * (6 * m + 1));
  }
  const int m = (k - 1) / 4;
  return v.coefficient(8 * m + 8, -2 * (6 * m + 6));
}

Rational gamma_coefficient(int k, EvalRoute route) {
  if (k < 3 || k % 2 != 1) throw InvalidArgument("gamma_k needs odd k >= 3");
  const ClosedFormValue v = sum_closed_form({Family::COSH_SINH3, k}, route);
  if (k % 4 == 3) return v.coefficient(0, -6);
  const int m = (k - 1) / 4;
  return v.coefficient(8 * m, -2 * (6 * m + 2));
}

}  // namespace berndt
