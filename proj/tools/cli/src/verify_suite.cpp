#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>
#include <tuple>

#include "berndt/berndt_integrals.hpp"
#include "berndt/conjecture.hpp"
#include "berndt/constants.hpp"
#include "berndt/eisenstein.hpp"
#include "berndt/errors.hpp"
#include "berndt/hyperbolic_sums.hpp"
#include "berndt/jacobi_series.hpp"
#include "berndt/quadrature.hpp"
#include "berndt/special_numbers.hpp"
#include "berndt/zjet.hpp"
#include "berndt_cli/cli.hpp"
#include "reference.hpp"

namespace berndt::cli {

namespace {

using Outcome = std::pair<Status, std::string>;

Outcome exact(long mismatches) {
  return {mismatches == 0 ? Status::ExactPass : Status::Fail, std::to_string(mismatches)};
}

// Passes when delta < 2^tol_log2.
Outcome numeric(const HPReal& delta, long tol_log2) {
  const bool ok = delta.is_finite() && delta < HPReal::pow2(tol_log2, delta.prec());
  return {ok ? Status::NumericPass : Status::Fail, delta.is_zero() ? "0" : delta.to_decimal(6)};
}

HPReal sum_delta(const SumFamily& sum, long prec) {
  return abs(sum_numeric(sum, prec) - to_real(sum_closed_form(sum), prec));
}

// Polynomial in sigma = x(1-x): invariant under x -> 1 - x.
bool symmetric(const Poly& p) { return p.compose_affine(1, -1) == p; }
// sigma' times a polynomial in sigma: odd under x -> 1 - x.
bool antisymmetric(const Poly& p) { return p.compose_affine(1, -1) == -p; }

// Every term of e has one of the allowed jet signatures, no r factor, and a
// polynomial coefficient of the required symmetry.
long grading_mismatches(const EllipticExpr& e, const std::vector<int>& sym_jets,
                        const std::vector<int>& anti_jets) {
  long bad = 0;
  for (const auto& [key, coeff] : e.terms()) {
    if (key.r_exp != 0 || !coeff.is_polynomial()) {
      ++bad;
      continue;
    }
    const Poly num = coeff.numerator() * (Rational(1) / coeff.denominator().leading());
    if (key.jets == sym_jets) {
      bad += symmetric(num) ? 0 : 1;
    } else if (key.jets == anti_jets) {
      bad += antisymmetric(num) ? 0 : 1;
    } else {
      ++bad;
    }
  }
  return bad;
}

// Deterministic random expression with up to six terms.
EllipticExpr random_expr(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> small(0, 2);
  std::uniform_int_distribution<int> count(1, 6);
  EllipticExpr e;
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    Poly c{coef(rng), coef(rng), coef(rng)};
    if (c.is_zero()) c = Poly(1);
    ExprKey key;
    key.r_exp = small(rng) % 2;
    key.jets = {small(rng), small(rng), small(rng)};
    while (!key.jets.empty() && key.jets.back() == 0) key.jets.pop_back();
    e += EllipticExpr::term(RatFunX(c), key);
  }
  return e;
}

Outcome check_special_numbers(const SuiteOptions&) {
  long bad = 0;
  bad += bernoulli(1) != make_rational(-1, 2);
  bad += bernoulli(2) != make_rational(1, 6);
  bad += bernoulli(4) != make_rational(-1, 30);
  bad += bernoulli(12) != make_rational(-691, 2730);
  bad += bernoulli(7) != 0;
  const long secant[] = {1, 1, 5, 61, 1385, 50521};
  for (int n = 0; n < 6; ++n) bad += euler_number(n) != secant[n];
  return exact(bad);
}

Outcome check_zjets(const SuiteOptions&) {
  long bad = 0;
  bad += zjet_at_half(0) != ClosedFormValue::monomial(make_rational(1, 2), 2, -3);
  bad += zjet_at_half(1) != ClosedFormValue::monomial(4, -2, 1);
  bad += zjet_at_half(3) != ClosedFormValue::monomial(36, -2, 1);
  bad += zjet_at_half(0) != zjet_at_half(2);
  return exact(bad);
}

Outcome check_ring_axioms(const SuiteOptions&) {
  std::mt19937 rng(20240521u);
  long bad = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const EllipticExpr a = random_expr(rng), b = random_expr(rng), c = random_expr(rng);
    bad += (a * b) * c != a * (b * c);
    bad += a * (b + c) != a * b + a * c;
    bad += (a * b).diff_x() != a.diff_x() * b + a * b.diff_x();
    bad += (a * b).eval_at_half() != a.eval_at_half() * b.eval_at_half();
  }
  const Poly sigma = Poly{0, 1, -1};
  bad += sigma.derivative() * sigma.derivative() != Poly(1) - Rational(4) * sigma;
  return exact(bad);
}

Outcome check_pqr(const SuiteOptions&) {
  const EllipticExpr x = EllipticExpr::x(), z = EllipticExpr::z(), z1 = EllipticExpr::z(1);
  const EllipticExpr one(1);
  const auto [P, Q, R] = eisenstein_PQR();
  long bad = 0;
  bad += P != (one - Rational(2) * x) * z.pow(2) + Rational(6) * x * (one - x) * z * z1;
  bad += Q != z.pow(4) * (one - x + x * x);
  bad += R != z.pow(6) * (one + x) * (one - make_rational(1, 2) * x) * (one - Rational(2) * x);
  return exact(bad);
}

Outcome check_series_bases(const SuiteOptions&) {
  const EllipticExpr s = EllipticExpr::sigma();
  const EllipticExpr ds = EllipticExpr(RatFunX(Poly{1, -2}));
  const EllipticExpr z = EllipticExpr::z(), z1 = EllipticExpr::z(1), one(1);
  long bad = 0;
  bad += s_series(2) != make_rational(1, 240) * z.pow(4) * (one - s);
  // -R/504; the sigma form carries a minus sign since (1+x)(1-x/2) = (2+sigma)/2.
  bad += s_series(3) != make_rational(-1, 504) * eisenstein_PQR().R;
  bad += s_series(3) != make_rational(-1, 1008) * z.pow(6) * (Rational(2) * one + s) * ds;
  bad += phi_series(1) != make_rational(1, 288) * (Rational(3) * z.pow(4) * s -
                                                   Rational(12) * z.pow(3) * z1 * s * ds -
                                                   Rational(36) * z.pow(2) * z1.pow(2) * s.pow(2));
  bad += phi_series(2) != make_rational(1, 1440) * (Rational(-3) * z.pow(6) * s * ds +
                                                    Rational(12) * z.pow(5) * z1 * (one - s) * s);
  return exact(bad);
}

Outcome check_s_grading(const SuiteOptions& o) {
  long bad = 0;
  for (int m = 1; m <= o.mmax; ++m) {
    bad += grading_mismatches(s_series(2 * m), {4 * m}, {});          // S_{4m-1}
    bad += grading_mismatches(s_series(2 * m + 1), {}, {4 * m + 2});  // S_{4m+1}
  }
  return exact(bad);
}

Outcome check_phi_grading(const SuiteOptions& o) {
  long bad = 0;
  for (int m = 1; m <= o.mmax; ++m) {
    bad += grading_mismatches(phi_series(2 * m + 1), {4 * m + 4}, {4 * m + 3, 1});
    bad += grading_mismatches(phi_series(2 * m), {4 * m + 1, 1}, {4 * m + 2});
  }
  return exact(bad);
}

Outcome check_phi_half_row(const SuiteOptions&) {
  long bad = 0;
  for (const auto& [k, value] : reference::phi_half_row())
    bad += (Rational(4) * phi_series(k / 2)).eval_at_half() != value;
  return exact(bad);
}

Outcome check_phi_numeric(const SuiteOptions& o) {
  const long wp = o.prec + 32;
  const HPReal q = exp(-pi(wp));
  HPReal worst(0L, o.prec);
  for (int m = 1; m <= 6; ++m) {
    const HPReal num = phi_numeric(1, 2 * m, q, o.prec);
    const HPReal sym = to_real(phi_series(m).eval_at_half(), o.prec);
    worst = max(worst, abs(num - sym));
  }
  // P(q) = 1 - 24 sum n q^2n / (1 - q^2n)
  const HPReal p_num = HPReal(1L, wp) - 24 * phi_numeric(0, 1, q, o.prec);
  worst = max(worst, abs(p_num - to_real(eisenstein_PQR().P.eval_at_half(), o.prec)));
  return numeric(worst, -o.prec + 16);
}

Outcome check_pythagorean(const SuiteOptions&) {
  const int order = 36;
  const JacobiTriple t = jacobi_sn_cn_dn(order);
  SeriesQx xs(order);
  xs[0] = Poly::x();
  const SeriesQx a = t.sn * t.sn + t.cn * t.cn;
  const SeriesQx b = xs * t.sn * t.sn + t.dn * t.dn;
  long bad = 0;
  for (int k = 0; k <= a.order(); ++k) bad += a[k] != Poly(k == 0 ? 1 : 0);
  for (int k = 0; k <= b.order(); ++k) bad += b[k] != Poly(k == 0 ? 1 : 0);
  return exact(bad);
}

Outcome check_integrality(const SuiteOptions&) {
  long bad = 0;
  for (int m = 0; m <= 24; ++m) bad += !JacobiTable::shared().f(m).has_integer_coefficients();
  return exact(bad);
}

Outcome check_parity(const SuiteOptions&) {
  auto& t = JacobiTable::shared();
  long bad = 0;
  for (int m = 1; m <= 36; m += 2) bad += !t.f(m).is_zero() + !t.p(m).is_zero() + !t.q(m).is_zero();
  return exact(bad);
}

Outcome check_q_symmetry(const SuiteOptions&) {
  auto& t = JacobiTable::shared();
  const Rational half = make_rational(1, 2);
  long bad = 0;
  for (int j = 0; 2 * j <= 36; ++j) {
    const Poly q = t.q(2 * j);
    bad += q.compose_affine(1, -1) != (j % 2 == 0 ? q : -q);
  }
  for (int m = 1; 4 * m <= 36; ++m) {
    bad += t.q(4 * m - 2)(half) != 0;
    bad += t.q(4 * m).derivative()(half) != 0;
    bad += t.q(4 * m - 2).derivative().derivative()(half) != 0;
  }
  return exact(bad);
}

Outcome check_dc_nc(const SuiteOptions&) {
  auto& t = JacobiTable::shared();
  long bad = 0;
  const auto dc = reference::dc_even_polys();
  const auto nc = reference::nc_even_polys();
  for (std::size_t i = 0; i < dc.size(); ++i) bad += t.p(2 * static_cast<int>(i)) != dc[i];
  for (std::size_t i = 0; i < nc.size(); ++i) bad += t.f(2 * static_cast<int>(i)) != nc[i];
  return exact(bad);
}

Outcome check_sum_expressions(const SuiteOptions&) {
  long bad = 0;
  for (const auto& [sum, expr] : reference::printed_sum_expressions()) bad += sum_symbolic(sum) != expr;
  return exact(bad);
}

Outcome check_family(Family family, const SuiteOptions& o) {
  HPReal worst(0L, o.prec);
  for (int e : admissible_exponents(family, 30)) worst = max(worst, sum_delta({family, e}, o.prec));
  return numeric(worst, -o.prec + 16);
}

Outcome check_printed_sums(const SuiteOptions&) {
  long bad = 0;
  for (const auto& [sum, value] : reference::printed_sum_values()) bad += sum_closed_form(sum) != value;
  return exact(bad);
}

Outcome check_cosh2_relation(const SuiteOptions&) {
  long bad = 0;
  for (int p = 1; p <= 6; ++p) {
    const ClosedFormValue rhs =
        Rational(4 * p - 1) * ClosedFormValue::pi_power(-2) * sum_closed_form({Family::COSH2, 4 * p - 2});
    bad += sum_closed_form({Family::SINH_COSH3, 4 * p - 1}) != rhs;
  }
  return exact(bad);
}

Outcome check_sinh2_relation(const SuiteOptions&) {
  long bad = 0;
  for (int p = 2; p <= 6; ++p) {
    const ClosedFormValue rhs = make_rational(4 * p - 1, 2) * ClosedFormValue::pi_power(-2) *
                                sum_closed_form({Family::SINH2, 4 * p - 2});
    bad += sum_closed_form({Family::COSH_SINH3, 4 * p - 1}) != rhs;
  }
  bad += sum_closed_form({Family::COSH_SINH3, 1}) != sum_closed_form({Family::SINH2, 2});
  return exact(bad);
}

Outcome check_zucker(const SuiteOptions& o) {
  const long wp = o.prec + 32;
  HPReal worst(0L, o.prec);
  for (long factor : {1L, 2L}) {
    const HPReal y = pi(wp) * factor;
    worst = max(worst, abs(sum_numeric_at({Family::SINH2, 0}, y, o.prec) - zucker_exp_sum(y, o.prec)));
  }
  return numeric(worst, -o.prec + 16);
}

Outcome check_support(const SuiteOptions&) {
  long bad = 0;
  for (Family f : {Family::SINH2, Family::COSH_SINH3, Family::COSH2, Family::SINH_COSH3}) {
    for (int e : admissible_exponents(f, 30)) {
      const SumFamily sum{f, e};
      const auto allowed = predicted_support(sum);
      if (!allowed) {
        ++bad;
        continue;
      }
      const ClosedFormValue value = sum_closed_form(sum);
      for (const auto& [key, c] : value.terms())
        bad += std::find(allowed->begin(), allowed->end(), key) == allowed->end();
    }
  }
  return exact(bad);
}

Outcome check_coefficient_table(const std::vector<reference::IndexedRational>& table,
                                Rational (*extract)(int, EvalRoute)) {
  long bad = 0;
  for (const auto& [k, value] : table) bad += extract(k, EvalRoute::Direct) != value;
  return exact(bad);
}

Outcome check_ramanujan(const SuiteOptions& o) {
  return numeric(abs(alternating_sech_sum(3, o.prec)), -o.prec + 16);
}

Outcome check_integral_table(IntegralKind kind, const std::vector<reference::IndexedClosedForm>& table) {
  long bad = 0;
  for (const auto& [p, value] : table) bad += integral_closed_form(kind, p) != value;
  return exact(bad);
}

Outcome check_minus2_routes(const SuiteOptions&) {
  long bad = 0;
  for (int p = 1; p <= 7; ++p) bad += integral_closed_form(IntegralKind::MINUS2, p) != minus2_from_coefficients(p);
  return exact(bad);
}

// The PLUS2 integral rebuilt from the two odd-shift sums, each evaluated
// from its expression in x and z rather than from the q-polynomial formula.
Outcome check_plus2_routes(const SuiteOptions&) {
  long bad = 0;
  for (int p = 1; p <= 7; ++p) {
    const Rational sign = p % 2 == 0 ? 1 : -1;
    const Rational scale = sign / pow2(2 * p + 1);
    const ClosedFormValue sc3 = sum_symbolic({Family::SINH_COSH3, 4 * p + 1}).eval_at_half();
    const ClosedFormValue c2 = sum_symbolic({Family::COSH2, 4 * p}).eval_at_half();
    const ClosedFormValue assembled = scale * (ClosedFormValue::pi_power(8 * p + 4) * sc3) -
                                      scale * Rational(4 * p + 1) * (ClosedFormValue::pi_power(8 * p + 2) * c2);
    bad += integral_closed_form(IntegralKind::PLUS2, p) != assembled;
  }
  return exact(bad);
}

Outcome check_integral_numeric(IntegralKind kind, int p_first, const SuiteOptions& o) {
  HPReal worst(0L, o.prec);
  for (int p = p_first; p <= 7; ++p) {
    const IntegralResult r = integral_numeric({kind, 4 * p + 1}, o.prec);
    worst = max(worst, abs(r.value - to_real(integral_closed_form(kind, p), o.prec)));
  }
  return numeric(worst, -o.prec + 24);
}

Outcome check_quadrature(const SuiteOptions& o) {
  const long wp = o.prec + 32;
  // integral of x e^(-2x) over [0, T] in unit panels; the tail is (2T+1) e^(-2T) / 4
  const long T = static_cast<long>((o.prec + 16) * 0.3466) + 8;
  HPReal total(0L, wp);
  for (long a = 0; a < T; a += 2) {
    total += tanh_sinh_quadrature([](const HPReal& x) { return x * exp(-2 * x); }, HPReal(a, wp),
                                  HPReal(a + 2, wp), o.prec)
                 .value;
  }
  HPReal delta = abs(total - HPReal(make_rational(1, 4), wp));
  delta = max(delta, abs(tanh_sinh_quadrature([](const HPReal& x) { return x; }, HPReal(0L, wp),
                                              HPReal(1L, wp), o.prec)
                             .value -
                         HPReal(make_rational(1, 2), wp)));
  delta = max(delta, abs(tanh_sinh_quadrature([](const HPReal& x) { return HPReal(1L, x.prec()) / sqrt(x); },
                                              HPReal(0L, wp), HPReal(1L, wp), o.prec)
                             .value -
                         HPReal(2L, wp)));
  return numeric(delta, -o.prec + 8);
}

Outcome check_relation(Relation which, std::initializer_list<int> as, const SuiteOptions& o) {
  HPReal worst(0L, o.prec);
  for (int a : as) worst = max(worst, relation_check(which, a, o.prec).abs_delta);
  return numeric(worst, -o.prec + 24);
}

// 4 * integral of t / (cos t + cosh t) against (pi / 4) Gamma(1/4)^2 / Gamma(3/4)^2,
// with Gamma(3/4) taken from MPFR's general gamma function.
Outcome check_berndt_identity(const SuiteOptions& o) {
  const long wp = o.prec + 32;
  const IntegralResult r = integral_numeric({IntegralKind::PLUS1, 1}, o.prec);
  HPReal g34(wp);
  mpfr_gamma(g34.get(), HPReal(make_rational(3, 4), wp).get(), MPFR_RNDN);
  const HPReal g14 = gamma_quarter(wp);
  const HPReal rhs = pi(wp) / 4 * g14 * g14 / (g34 * g34);
  return numeric(abs(4 * r.value - rhs), -o.prec + 24);
}

Outcome check_gamma_quarter(const SuiteOptions& o) {
  const long wp = o.prec + 32;
  const HPReal g = gamma_quarter(o.prec);
  HPReal reference(wp);
  mpfr_gamma(reference.get(), HPReal(make_rational(1, 4), wp).get(), MPFR_RNDN);
  const HPReal two_pi = 2 * pi(wp);
  const HPReal ratio = g * g * agm(HPReal(1L, wp), sqrt2(wp)) / (two_pi * sqrt(two_pi));
  const HPReal delta = max(abs(g - reference), abs(ratio - HPReal(1L, wp)));
  return numeric(delta, -o.prec + 4);
}

Outcome check_two_precisions(const SuiteOptions&) {
  const SumFamily sums[] = {{Family::SINH2, 6}, {Family::COSH_SINH3, 9}, {Family::COSH2, 4},
                            {Family::ALT_EXP_PLUS, 3}};
  bool ok = true;
  HPReal worst(0L, 200);
  for (const auto& s : sums) {
    const HPReal d128 = sum_delta(s, 128);
    const HPReal d200 = sum_delta(s, 200);
    ok = ok && d200 * HPReal::pow2(60, 200) <= max(d128, HPReal::pow2(-128, 200));
    worst = max(worst, d200);
  }
  return {ok ? Status::NumericPass : Status::Fail, worst.is_zero() ? "0" : worst.to_decimal(6)};
}

Outcome check_conjecture(const SuiteOptions& o) {
  long bad = 0;
  for (const auto& e : conjecture_check(o.pmax)) bad += !e.g_relation_ok + !e.h_relation_ok;
  return exact(bad);
}

}  // namespace

const char* status_name(Status status) {
  switch (status) {
    case Status::ExactPass: return "exact_pass";
    case Status::NumericPass: return "numeric_pass";
    case Status::Fail: return "fail";
  }
  return "fail";
}

std::vector<SuiteItem> verification_suite() {
  using O = const SuiteOptions&;
  std::vector<SuiteItem> items = {
      {"special-numbers", "Bernoulli and secant numbers", check_special_numbers},
      {"zjet-values", "derivatives of z at x = 1/2 and z(1/2) = z''(1/2)", check_zjets},
      {"expr-algebra", "ring axioms, Leibniz rule, evaluation homomorphism, (sigma')^2 = 1 - 4 sigma",
       check_ring_axioms},
      {"eisenstein-pqr", "P, Q, R in terms of x and z", check_pqr},
      {"series-bases", "S_3, S_5, Phi_{1,2}, Phi_{1,4} in terms of sigma and z", check_series_bases},
      {"grading-s", "S_{4m-1} in z^{4m} Q[sigma], S_{4m+1} in z^{4m+2} Q[sigma] sigma'", check_s_grading},
      {"grading-phi", "Phi_{1,4m} and Phi_{1,4m+2} jet gradings", check_phi_grading},
      {"phi-half-row", "4 Phi_{1,k} at x = 1/2 in z and z', k = 2..20", check_phi_half_row},
      {"phi-numeric", "Phi_{1,k}(e^-pi) by direct summation, k <= 12, and P(e^-pi)", check_phi_numeric},
      {"jacobi-pythagorean", "sn^2 + cn^2 = 1 and x sn^2 + dn^2 = 1 to order 36", check_pythagorean},
      {"nc-integrality", "f_m has integer coefficients, m <= 24", check_integrality},
      {"jacobi-parity", "f_m = p_m = q_m = 0 for odd m", check_parity},
      {"q-symmetry", "q_2j(1 - x) = (-1)^j q_2j(x) and the three vanishing values at 1/2", check_q_symmetry},
      {"dc-nc-polynomials", "Maclaurin coefficients of dc and nc through u^10", check_dc_nc},
      {"alternating-sum-expressions", "low-order alternating sums in x, sqrt(1-x), z, z'",
       check_sum_expressions},
  };
  for (Family f : kAllFamilies) {
    std::string id = "sum-numeric-" + std::string(family_name(f));
    std::transform(id.begin(), id.end(), id.begin(), [](unsigned char c) {
      return c == '_' ? '-' : static_cast<char>(std::tolower(c));
    });
    items.push_back({id, "direct summation against the closed form, exponents <= 30 (" +
                             std::string(family_name(f)) + ")",
                     [f](O o) { return check_family(f, o); }});
  }
  const std::vector<SuiteItem> rest = {
      {"printed-sum-values", "worked sinh^-2, cosh/sinh^3, cosh^-2, sinh/cosh^3 values", check_printed_sums},
      {"sinh-cosh3-from-cosh2", "odd-shift sinh/cosh^3 sum equals (4p-1)/pi times the cosh^-2 sum",
       check_cosh2_relation},
      {"cosh-sinh3-from-sinh2", "cosh/sinh^3 sum equals (4p-1)/(2 pi) times the sinh^-2 sum, and the s = 1 case",
       check_sinh2_relation},
      {"zucker-identity", "sum 1/sinh^2(ny) = 4 sum n/(e^(2ny) - 1) at y = pi, 2 pi", check_zucker},
      {"closed-form-support", "monomial support of the four closed-form families", check_support},
      {"alpha-table", "alpha_k, k = 2..20",
       [](O) { return check_coefficient_table(reference::alpha_table(), alpha_coefficient); }},
      {"beta-table", "beta_k, k = 3..23",
       [](O) { return check_coefficient_table(reference::beta_table(), beta_coefficient); }},
      {"gamma-table", "gamma_k, k = 3..23",
       [](O) { return check_coefficient_table(reference::gamma_table(), gamma_coefficient); }},
      {"ramanujan-vanishing", "sum (-1)^n (2n+1)^3 / cosh((2n+1) pi/2) = 0", check_ramanujan},
      {"minus2-table", "x^(4p+1)/(cos x - cosh x)^2 closed forms, p = 1..7",
       [](O) { return check_integral_table(IntegralKind::MINUS2, reference::minus2_table()); }},
      {"plus2-table", "x^(4p+1)/(cos x + cosh x)^2 closed forms, p = 0..7",
       [](O) { return check_integral_table(IntegralKind::PLUS2, reference::plus2_table()); }},
      {"minus2-routes", "minus-squared integral from sums vs from alpha/beta/gamma", check_minus2_routes},
      {"plus2-routes", "plus-squared integral from q-polynomials vs from the sums", check_plus2_routes},
      {"minus2-numeric", "quadrature of x^(4p+1)/(cos x - cosh x)^2, p = 1..7",
       [](O o) { return check_integral_numeric(IntegralKind::MINUS2, 1, o); }},
      {"plus2-numeric", "quadrature of x^(4p+1)/(cos x + cosh x)^2, p = 0..7",
       [](O o) { return check_integral_numeric(IntegralKind::PLUS2, 0, o); }},
      {"quadrature-self-test", "integrals of x e^(-2x), x and 1/sqrt(x)", check_quadrature},
      {"relation-plus2", "integral vs sums for (cos x + cosh x)^-2, a = 1, 3",
       [](O o) { return check_relation(Relation::THM42, {1, 3}, o); }},
      {"relation-minus2", "integral vs sums for (cos x - cosh x)^-2, a = 5, 7",
       [](O o) { return check_relation(Relation::THM43, {5, 7}, o); }},
      {"relation-plus1", "integral vs alternating sech sums for (cos x + cosh x)^-1, a = 0, 2",
       [](O o) { return check_relation(Relation::EQ_ONE, {0, 2}, o); }},
      {"relation-minus1", "integral vs alternating csch sums for (cos x - cosh x)^-1, a = 2..5",
       [](O o) { return check_relation(Relation::EQ_MINUS_ONE, {2, 3, 4, 5}, o); }},
      {"berndt-identity", "4 int t/(cos t + cosh t) = (pi/4) Gamma(1/4)^2 / Gamma(3/4)^2", check_berndt_identity},
      {"gamma-quarter", "Gamma(1/4) by AGM against MPFR gamma", check_gamma_quarter},
      {"two-precision", "sum deltas shrink by 2^60 from 128 to 200 bits", check_two_precisions},
      {"conjecture", "g = -(2^(2p-1) - (-1)^p)/2^(2p-1) i and h = -(2^(2p-1) + (-1)^p)/2^(2p-1) j",
       check_conjecture},
  };
  items.insert(items.end(), rest.begin(), rest.end());
  return items;
}

std::vector<VerificationEntry> run_suite(const std::vector<SuiteItem>& items, const SuiteOptions& options,
                                         std::ostream* progress) {
  std::vector<VerificationEntry> results(items.size());
  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;
  std::size_t done = 0;

  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      VerificationEntry& e = results[i];
      e.identity_id = items[i].identity_id;
      e.anchor = items[i].anchor;
      const auto start = std::chrono::steady_clock::now();
      std::string error;
      try {
        std::tie(e.status, e.delta) = items[i].check(options);
      } catch (const std::exception& ex) {
        e.status = Status::Fail;
        e.delta = "nan";
        error = ex.what();
      }
      e.runtime_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (progress) {
        std::lock_guard lock(progress_mutex);
        *progress << '[' << ++done << '/' << items.size() << "] " << e.identity_id << ' '
                  << status_name(e.status) << (error.empty() ? "" : " (" + error + ")") << '\n';
      }
    }
  };

  const unsigned n = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                     static_cast<unsigned>(items.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace berndt::cli
