#include <gtest/gtest.h>

#include "berndt/berndt_integrals.hpp"
#include "berndt/constants.hpp"
#include "berndt/errors.hpp"
#include "berndt/hyperbolic_sums.hpp"
#include "reference.hpp"
#include "test_support.hpp"

namespace berndt {
namespace {

using testing::two_pow;

TEST(Integrals, KindNamesRoundTrip) {
  for (IntegralKind k : {IntegralKind::PLUS2, IntegralKind::MINUS2, IntegralKind::PLUS1, IntegralKind::MINUS1})
    EXPECT_EQ(parse_kind(kind_name(k)), k);
  EXPECT_FALSE(parse_kind("plus3").has_value());
}

TEST(ClosedForm, PrintedMinusSquaredTable) {
  for (const auto& [p, value] : cli::reference::minus2_table())
    EXPECT_EQ(integral_closed_form(IntegralKind::MINUS2, p), value) << p;
}

TEST(ClosedForm, PrintedPlusSquaredTable) {
  for (const auto& [p, value] : cli::reference::plus2_table())
    EXPECT_EQ(integral_closed_form(IntegralKind::PLUS2, p), value) << p;
}

TEST(ClosedForm, MinusSquaredRoutesAgree) {
  for (int p = 1; p <= 7; ++p)
    EXPECT_EQ(integral_closed_form(IntegralKind::MINUS2, p), minus2_from_coefficients(p)) << p;
}

// PLUS2 of x^(4p+1) = (-1)^p / 2^(2p+1) [pi^(4p+2) SC3(4p+1) - (4p+1) pi^(4p+1) COSH2(4p)],
// with both sums taken from their expressions in x and z.
TEST(ClosedForm, PlusSquaredFromOddShiftSums) {
  for (int p = 1; p <= 7; ++p) {
    const Rational scale = Rational(p % 2 == 0 ? 1 : -1) / pow2(2 * p + 1);
    const ClosedFormValue sc3 = sum_symbolic({Family::SINH_COSH3, 4 * p + 1}).eval_at_half();
    const ClosedFormValue c2 = sum_symbolic({Family::COSH2, 4 * p}).eval_at_half();
    const ClosedFormValue assembled = scale * (ClosedFormValue::pi_power(8 * p + 4) * sc3) -
                                      scale * Rational(4 * p + 1) * (ClosedFormValue::pi_power(8 * p + 2) * c2);
    EXPECT_EQ(integral_closed_form(IntegralKind::PLUS2, p), assembled) << p;
  }
}

TEST(ClosedForm, OutOfRangeThrows) {
  EXPECT_THROW(integral_closed_form(IntegralKind::MINUS2, 0), UnsupportedExponent);
  EXPECT_THROW(integral_closed_form(IntegralKind::PLUS2, -1), UnsupportedExponent);
  EXPECT_THROW(integral_closed_form(IntegralKind::PLUS1, 1), UnsupportedExponent);
  EXPECT_THROW(integral_numeric({IntegralKind::MINUS2, 3}, 64), UnsupportedExponent);
  EXPECT_THROW(integral_numeric({IntegralKind::MINUS1, 1}, 64), UnsupportedExponent);
}

TEST(Quadrature, MatchesClosedForms) {
  const long prec = 200;
  for (int p : {0, 1, 3}) {
    const IntegralResult r = integral_numeric({IntegralKind::PLUS2, 4 * p + 1}, prec);
    const HPReal expected = testing::oracle_real(integral_closed_form(IntegralKind::PLUS2, p), prec);
    EXPECT_LT(abs(r.value - expected), two_pow(-prec + 24, prec + 160)) << "PLUS2 " << p;
    EXPECT_GT(r.panels, 0);
    EXPECT_LT(r.tail_bound, two_pow(-prec, prec + 160));
  }
  for (int p : {1, 2, 4}) {
    const IntegralResult r = integral_numeric({IntegralKind::MINUS2, 4 * p + 1}, prec);
    const HPReal expected = testing::oracle_real(integral_closed_form(IntegralKind::MINUS2, p), prec);
    EXPECT_LT(abs(r.value - expected), two_pow(-prec + 24, prec + 160)) << "MINUS2 " << p;
  }
}

// int_0^inf x/(cos x + cosh x) dx = (pi/16) Gamma(1/4)^2 / Gamma(3/4)^2 = Gamma(1/4)^4 / (32 pi)
TEST(Quadrature, FirstMomentOfPlusOne) {
  const long prec = 200, wp = 360;
  const IntegralResult r = integral_numeric({IntegralKind::PLUS1, 1}, prec);
  const HPReal g14 = testing::mpfr_gamma_of(make_rational(1, 4), wp);
  const HPReal g34 = testing::mpfr_gamma_of(make_rational(3, 4), wp);
  const HPReal via_gamma34 = testing::mpfr_pi(wp) / 16 * g14 * g14 / (g34 * g34);
  const HPReal via_gamma14 = pow(g14, 4) / (32 * testing::mpfr_pi(wp));
  EXPECT_LT(abs(via_gamma34 - via_gamma14), two_pow(-340, wp));
  EXPECT_LT(abs(r.value - via_gamma14), two_pow(-prec + 24, wp));
  // 4 times the integral is Gamma^4/(8 pi), a quarter of Gamma^4/(2 pi).
  EXPECT_GT(abs(4 * r.value - pow(g14, 4) / (2 * testing::mpfr_pi(wp))), HPReal(1L, wp));
}

TEST(Relations, BothSidesAgree) {
  const long prec = 200;
  const std::pair<Relation, int> cases[] = {
      {Relation::THM42, 1},        {Relation::THM42, 3},        {Relation::THM43, 5},
      {Relation::THM43, 7},        {Relation::EQ_ONE, 0},       {Relation::EQ_ONE, 2},
      {Relation::EQ_MINUS_ONE, 2}, {Relation::EQ_MINUS_ONE, 3}, {Relation::EQ_MINUS_ONE, 5},
  };
  for (const auto& [which, a] : cases) {
    const RelationReport r = relation_check(which, a, prec);
    EXPECT_LT(r.abs_delta, two_pow(-prec + 24, prec + 32)) << relation_name(which) << " a=" << a;
    EXPECT_FALSE(r.statement.empty());
  }
}

TEST(Relations, InvalidExponentsThrow) {
  EXPECT_THROW(relation_check(Relation::THM42, 2, 64), UnsupportedExponent);
  EXPECT_THROW(relation_check(Relation::THM43, 3, 64), UnsupportedExponent);
  EXPECT_THROW(relation_check(Relation::EQ_ONE, 1, 64), UnsupportedExponent);
  EXPECT_THROW(relation_check(Relation::EQ_MINUS_ONE, 6, 64), UnsupportedExponent);
  EXPECT_FALSE(parse_relation("thm99").has_value());
}

}  // namespace
}  // namespace berndt
