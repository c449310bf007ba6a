#include "berndt/berndt_integrals.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "berndt/constants.hpp"
#include "berndt/errors.hpp"
#include "berndt/hyperbolic_sums.hpp"
#include "berndt/jacobi_series.hpp"
#include "berndt/quadrature.hpp"

namespace berndt {

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

int sign_power(int p) { return p % 2 == 0 ? 1 : -1; }

}  // namespace

std::string_view kind_name(IntegralKind kind) {
  switch (kind) {
    case IntegralKind::PLUS2: return "PLUS2";
    case IntegralKind::MINUS2: return "MINUS2";
    case IntegralKind::PLUS1: return "PLUS1";
    case IntegralKind::MINUS1: return "MINUS1";
  }
  return "?";
}

std::optional<IntegralKind> parse_kind(std::string_view name) {
  for (auto k : {IntegralKind::PLUS2, IntegralKind::MINUS2, IntegralKind::PLUS1, IntegralKind::MINUS1}) {
    if (kind_name(k) == upper(name)) return k;
  }
  return std::nullopt;
}

std::string_view relation_name(Relation which) {
  switch (which) {
    case Relation::THM42: return "THM42";
    case Relation::THM43: return "THM43";
    case Relation::EQ_ONE: return "EQ_ONE";
    case Relation::EQ_MINUS_ONE: return "EQ_MINUS_ONE";
  }
  return "?";
}

std::optional<Relation> parse_relation(std::string_view name) {
  for (auto r : {Relation::THM42, Relation::THM43, Relation::EQ_ONE, Relation::EQ_MINUS_ONE}) {
    if (relation_name(r) == upper(name)) return r;
  }
  return std::nullopt;
}

ClosedFormValue integral_closed_form(IntegralKind kind, int p) {
  if (kind == IntegralKind::MINUS2) {
    if (p < 1) throw UnsupportedExponent("MINUS2 closed form needs p >= 1");
    // (-1)^p / (2^(2p-1) pi^(4p+1)) I = (4p+1) SINH2(4p) - 2 pi COSH_SINH3(4p+1)
    const ClosedFormValue sums =
        Rational(4 * p + 1) * sum_closed_form({Family::SINH2, 4 * p}) -
        ClosedFormValue::pi_power(2) * sum_closed_form({Family::COSH_SINH3, 4 * p + 1}) * Rational(2);
    return ClosedFormValue::pi_power(2 * (4 * p + 1)) * sums * Rational(sign_power(p) * pow2(2 * p - 1));
  }
  if (kind == IntegralKind::PLUS2) {
    if (p < 0) throw UnsupportedExponent("PLUS2 closed form needs p >= 0");
    if (p == 0) return ClosedFormValue(make_rational(-1, 8)) + ClosedFormValue::monomial(pow2(-9), 8, -8);
    const Poly q = JacobiTable::shared().q(4 * p);
    const Rational half = make_rational(1, 2);
    const Rational q0 = q(half);
    const Rational q2 = q.derivative().derivative()(half);
    const Rational h = Rational(sign_power(p)) * (4 * p * q0 + q2) / (pow2(6 * p + 11) * p);
    const Rational g = -Rational(sign_power(p) * (4 * p + 1)) * q0 / pow2(6 * p + 3);
    return ClosedFormValue::monomial(g, 8 * p, -4 * p) +
           ClosedFormValue::monomial(h, 8 * p + 8, -2 * (2 * p + 4));
  }
  throw UnsupportedExponent("closed forms exist only for PLUS2 and MINUS2");
}

ClosedFormValue minus2_from_coefficients(int p) {
  if (p < 1) throw UnsupportedExponent("MINUS2 closed form needs p >= 1");
  const EvalRoute route = EvalRoute::ReducedJets;
  const Rational alpha = alpha_coefficient(4 * p, route);
  const Rational beta = beta_coefficient(4 * p + 1, route);
  const Rational gamma = gamma_coefficient(4 * p + 1, route);
  const Rational i_p = sign_power(p) * pow2(2 * p - 1) * ((4 * p + 1) * alpha - 2 * gamma);
  const Rational j_p = -sign_power(p) * pow2(2 * p) * beta;
  return ClosedFormValue::monomial(i_p, 8 * p, -4 * p) +
         ClosedFormValue::monomial(j_p, 8 * p + 8, -2 * (2 * p + 4));
}

namespace {

constexpr long kGuardBits = 32;
constexpr long kTailBits = 16;
constexpr long kPanelWidth = 2;

bool squared(IntegralKind kind) { return kind == IntegralKind::PLUS2 || kind == IntegralKind::MINUS2; }
bool minus(IntegralKind kind) { return kind == IntegralKind::MINUS2 || kind == IntegralKind::MINUS1; }

// cos x - cosh x = -2 sum_{j odd} x^(2j) / (2j)!, free of cancellation.
HPReal cos_minus_cosh_series(const HPReal& x) {
  const long wp = x.prec();
  const HPReal x2 = x * x;
  const HPReal x4 = x2 * x2;
  HPReal term = x2 / 2;  // x^2 / 2!
  HPReal sum = term;
  const HPReal cutoff = HPReal::pow2(-wp - 4, wp);
  for (long j = 1;; j += 2) {
    // x^(2j+4) / (2j+4)! from x^(2j) / (2j)!
    term *= x4;
    term /= (2 * j + 1) * (2 * j + 2);
    term /= (2 * j + 3) * (2 * j + 4);
    sum += term;
    if (abs(term) < cutoff * sum) break;
  }
  return -2 * sum;
}

HPReal integrand(const IntegralSpec& spec, const HPReal& x) {
  HPReal denominator(x.prec());
  if (minus(spec.kind)) {
    denominator = x < HPReal(1L, x.prec()) ? cos_minus_cosh_series(x) : cos(x) - cosh(x);
  } else {
    denominator = cos(x) + cosh(x);
  }
  if (squared(spec.kind)) denominator *= denominator;
  return pow(x, spec.a) / denominator;
}

void check_spec(const IntegralSpec& spec) {
  if (spec.a < 0) throw UnsupportedExponent("integral exponent must be nonnegative");
  if (spec.kind == IntegralKind::MINUS2 && spec.a < 5) {
    throw UnsupportedExponent("MINUS2 needs a >= 5");
  }
  if (spec.kind == IntegralKind::MINUS1 && spec.a < 2) {
    throw UnsupportedExponent("MINUS1 needs a >= 2");
  }
}

}  // namespace

IntegralResult integral_numeric(const IntegralSpec& spec, long prec) {
  check_spec(spec);
  // |cos x +- cosh x| >= cosh x - 1 >= e^x / 5 for x >= 5, so the tail is
  // below K int_T^inf x^a e^(-c x) dx <= K T^a e^(-cT) / (c - a/T) for T > a/c,
  // with (K, c) = (25, 2) for squared denominators and (5, 1) otherwise.
  const double a = spec.a;
  const double c = squared(spec.kind) ? 2.0 : 1.0;
  const double log2_k = std::log2(squared(spec.kind) ? 25.0 : 5.0);
  auto log2_tail = [&](double t) {
    return log2_k + a * std::log2(t) - c * t / std::log(2.0) - std::log2(c - a / t);
  };
  const double target = -static_cast<double>(prec + kTailBits);
  long T = std::max<long>(6, static_cast<long>(std::ceil(a / c)) + 2);
  T += (kPanelWidth - T % kPanelWidth) % kPanelWidth;
  while (log2_tail(static_cast<double>(T)) + 1 >= target) T += kPanelWidth;
  const double tail_log2 = log2_tail(static_cast<double>(T)) + 1;

  // Peak of the integrand majorant K x^a e^(-cx) (x^(a-2) or x^(a-4) near 0
  // for the minus kinds stays below it) sets the extra working bits.
  const double peak_x = std::max(1.0, a / c);
  const double peak = std::max(0.0, log2_k + a * std::log2(peak_x) - c * peak_x / std::log(2.0));
  const int panels = static_cast<int>(T / kPanelWidth);
  const long extra = static_cast<long>(std::ceil(peak)) + static_cast<long>(std::ceil(std::log2(panels + 1.0)));
  const long qprec = prec + extra + 8;
  const long wp = qprec + kGuardBits;

  QuadratureOptions options;
  options.tolerance_log2 = -(prec + kTailBits) - static_cast<long>(std::ceil(std::log2(panels + 1.0)));
  auto f = [&spec](const HPReal& x) { return integrand(spec, x); };

  IntegralResult result{HPReal(wp), HPReal(wp), HPReal::pow2(static_cast<long>(std::ceil(tail_log2)), wp), T, panels};
  for (int k = 0; k < panels; ++k) {
    const HPReal lo(static_cast<long>(k) * kPanelWidth, wp);
    const HPReal hi(static_cast<long>(k + 1) * kPanelWidth, wp);
    const QuadratureResult piece = tanh_sinh_quadrature(f, lo, hi, qprec, options);
    result.value += piece.value;
    result.error_estimate += piece.error_estimate;
  }
  return result;
}

namespace {

// Exact Gaussian rational, for the complex prefactors of the relations.
struct GaussRational {
  Rational re;
  Rational im;

  friend GaussRational operator*(const GaussRational& u, const GaussRational& v) {
    return {u.re * v.re - u.im * v.im, u.re * v.im + u.im * v.re};
  }
  bool is_zero() const { return re == 0 && im == 0; }
};

GaussRational i_power(int n) {
  static const GaussRational cycle[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return cycle[((n % 4) + 4) % 4];
}

GaussRational power(GaussRational base, int n) {
  GaussRational out{1, 0};
  for (int k = 0; k < n; ++k) out = out * base;
  return out;
}

GaussRational inverse(const GaussRational& u) {
  const Rational norm = u.re * u.re + u.im * u.im;
  return {u.re / norm, -u.im / norm};
}

HPComplex times(const GaussRational& g, const HPReal& x) {
  const long wp = x.prec();
  return {HPReal(g.re, wp) * x, HPReal(g.im, wp) * x};
}

HPComplex real(const HPReal& x) { return {x, HPReal(x.prec())}; }

// (1 - i^(a+1)) / (1 + i)^(a-1)
GaussRational contour_factor(int a) {
  const GaussRational numerator{Rational(1) - i_power(a + 1).re, -i_power(a + 1).im};
  return numerator * inverse(power({1, 1}, a - 1));
}

}  // namespace

RelationReport relation_check(Relation which, int a, long prec) {
  // Extra bits for the polynomial-in-pi scale factors.
  const long wp = prec + 16 + 4L * (a + 2);
  const HPReal p = pi(wp);
  RelationReport report{which, a, real(HPReal(wp)), real(HPReal(wp)), HPReal(wp), {}};
  switch (which) {
    case Relation::THM42:
    case Relation::THM43: {
      const bool plus = which == Relation::THM42;
      if (a % 2 == 0 || a < (plus ? 1 : 5)) {
        throw UnsupportedExponent(std::string(relation_name(which)) + " is checked for odd a >= " +
                                  (plus ? "1" : "5"));
      }
      const GaussRational factor = contour_factor(a);
      if (factor.is_zero()) {
        report.lhs = real(HPReal(wp));
      } else {
        const IntegralSpec spec{plus ? IntegralKind::PLUS2 : IntegralKind::MINUS2, a};
        const HPReal integral = integral_numeric(spec, wp).value;
        report.lhs = times(factor, integral / pow(p, a));
      }
      if (plus) {
        // sum over t = n - 1/2 of t^k f(t pi) = 2^-k sum over u = 2n - 1 of u^k f(u pi / 2)
        const HPReal s1 = sum_numeric({Family::SINH_COSH3, a}, wp);
        const HPReal s0 = sum_numeric({Family::COSH2, a - 1}, wp);
        report.rhs = real((2 * p * s1 - a * 2 * s0) / HPReal::pow2(a, wp));
        report.statement = "contour relation for x^a/(cos x + cosh x)^2";
      } else {
        const HPReal s0 = sum_numeric({Family::SINH2, a - 1}, wp);
        const HPReal s1 = sum_numeric({Family::COSH_SINH3, a}, wp);
        report.rhs = real(a * s0 - 2 * p * s1);
        report.statement = "contour relation for x^a/(cos x - cosh x)^2";
      }
      break;
    }
    case Relation::EQ_ONE: {
      if (a < 0 || a % 2 != 0) throw UnsupportedExponent("EQ_ONE is checked for even a >= 0");
      const HPReal integral = integral_numeric({IntegralKind::PLUS1, 2 * a + 1}, wp).value;
      report.lhs = real(2 * integral);
      const HPReal sum = alternating_sech_sum(2 * a + 1, wp);
      report.rhs = times(i_power(a), pow(p, 2 * a + 2) * sum / HPReal::pow2(a, wp));
      report.statement = "x^(2a+1)/(cos x + cosh x) against the alternating sech series";
      break;
    }
    case Relation::EQ_MINUS_ONE: {
      if (a < 2 || a > 5) throw UnsupportedExponent("EQ_MINUS_ONE is checked for 2 <= a <= 5");
      const GaussRational factor{Rational(1) + i_power(a + 1).re, i_power(a + 1).im};
      if (factor.is_zero()) {
        report.lhs = real(HPReal(wp));
      } else {
        const HPReal integral = integral_numeric({IntegralKind::MINUS1, a}, wp).value;
        report.lhs = times(factor, integral);
      }
      const GaussRational rhs_factor = GaussRational{0, 2} * power({1, 1}, a - 1);
      report.rhs = times(rhs_factor, pow(p, a + 1) * alternating_csch_sum(a, wp));
      report.statement = "x^a/(cos x - cosh x) against the alternating csch series";
      break;
    }
  }
  report.abs_delta = max(abs(report.lhs.re - report.rhs.re), abs(report.lhs.im - report.rhs.im));
  return report;
}

}  // namespace berndt
