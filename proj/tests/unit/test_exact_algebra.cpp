#include <gtest/gtest.h>

#include "berndt/closed_form.hpp"
#include "berndt/elliptic_expr.hpp"
#include "berndt/errors.hpp"
#include "berndt/poly.hpp"
#include "berndt/ratfun.hpp"
#include "berndt/rational.hpp"
#include "berndt/serialize.hpp"
#include "berndt/special_numbers.hpp"
#include "berndt/zjet.hpp"
#include "test_support.hpp"

namespace berndt {
namespace {

using testing::random_expr;

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(parse_rational("-6/4"), make_rational(-3, 2));
  EXPECT_EQ(parse_rational("+10/5"), Rational(2));
}

TEST(Rational, RoundTripsThroughText) {
  for (const char* text : {"0", "-7", "3/8", "-12345678901234567890/7"})
    EXPECT_EQ(to_string(parse_rational(text)), text);
  EXPECT_EQ(to_string(parse_rational("4/6")), "2/3");
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
  EXPECT_THROW(parse_rational("abc"), InvalidArgument);
  EXPECT_THROW(parse_rational(""), InvalidArgument);
}

TEST(Rational, IntegerHelpers) {
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(factorial(20), Integer("2432902008176640000"));
  EXPECT_EQ(pow(make_rational(-2, 3), -3), make_rational(-27, 8));
}

TEST(Poly, ArithmeticAndEvaluation) {
  const Poly x = Poly::x();
  const Poly p = (x + Poly(1)).pow(2);
  EXPECT_EQ(p, (Poly{1, 2, 1}));
  EXPECT_EQ(p(make_rational(1, 2)), make_rational(9, 4));
  EXPECT_EQ(p.derivative(), (Poly{2, 2}));
  EXPECT_EQ(Poly{0}.degree(), -1);
}

TEST(Poly, DivisionAndGcd) {
  const Poly a = Poly{-1, 1} * Poly{2, 1};
  const Poly b = Poly{-1, 1} * Poly{3, 1};
  EXPECT_EQ(Poly::gcd(a, b), (Poly{-1, 1}));
  const auto [q, r] = Poly::divmod(Poly{1, 0, 0, 1}, Poly{1, 1});
  EXPECT_EQ(q, (Poly{1, -1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_THROW(Poly::divmod(Poly{1}, Poly{}), InvalidArgument);
}

TEST(Poly, ReflectionAboutOneHalf) {
  // x(1 - x) is invariant under x -> 1 - x, 1 - 2x changes sign.
  EXPECT_EQ((Poly{0, 1, -1}).compose_affine(1, -1), (Poly{0, 1, -1}));
  EXPECT_EQ((Poly{1, -2}).compose_affine(1, -1), (Poly{-1, 2}));
}

TEST(RatFunX, ReducesAndDetectsPoles) {
  const RatFunX f(Poly{-1, 0, 1}, Poly{-1, 1});
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f.numerator(), (Poly{1, 1}));
  const RatFunX g(Poly{1}, Poly{make_rational(-1, 2), 1});
  EXPECT_TRUE(g.has_pole_at(make_rational(1, 2)));
  EXPECT_THROW(g(make_rational(1, 2)), PoleAtHalf);
  EXPECT_EQ((g * RatFunX(Poly{make_rational(-1, 2), 1})), RatFunX(1));
}

TEST(SpecialNumbers, Bernoulli) {
  const Rational expected[] = {1, make_rational(-1, 2), make_rational(1, 6), 0, make_rational(-1, 30), 0,
                               make_rational(1, 42), 0, make_rational(-1, 30), 0, make_rational(5, 66)};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(bernoulli(n), expected[n]) << n;
  EXPECT_EQ(bernoulli(12), make_rational(-691, 2730));
  EXPECT_EQ(bernoulli(15), 0);
}

TEST(SpecialNumbers, SecantNumbers) {
  const long expected[] = {1, 1, 5, 61, 1385, 50521, 2702765, 199360981};
  for (int n = 0; n < 8; ++n) EXPECT_EQ(euler_number(n), expected[n]) << n;
  EXPECT_EQ(euler_table(7).size(), 8u);
}

TEST(ClosedForm, CanonicalArithmetic) {
  const ClosedFormValue root2 = ClosedFormValue::monomial(1, 0, 0, true);
  EXPECT_EQ(root2 * root2, ClosedFormValue(2));
  const ClosedFormValue v = ClosedFormValue(make_rational(1, 6)) - testing::gp(make_rational(1, 2), 0, -1);
  EXPECT_EQ(v.size(), 2u);
  EXPECT_TRUE((v - v).is_zero());
  EXPECT_EQ(v.coefficient(0, -2), make_rational(-1, 2));
  EXPECT_EQ(ClosedFormValue::pi_power(2).pow(3), ClosedFormValue::pi_power(6));
  EXPECT_EQ(v.to_string(), "-1/2*pi^-1 + 1/6");
}

TEST(ZJet, PublishedValuesAtHalf) {
  EXPECT_EQ(zjet_at_half(0), ClosedFormValue::monomial(make_rational(1, 2), 2, -3));
  EXPECT_EQ(zjet_at_half(1), ClosedFormValue::monomial(4, -2, 1));
  EXPECT_EQ(zjet_at_half(3), ClosedFormValue::monomial(36, -2, 1));
  EXPECT_EQ(zjet_at_half(0), zjet_at_half(2));
}

// n-th derivative of z at 1/2 is (1/2)_n^2 sqrt(pi) / Gamma(n/2 + 3/4)^2.
TEST(ZJet, AgreesWithGeneralGamma) {
  const long prec = 256;
  Rational rising = 1;
  for (int n = 0; n <= 10; ++n) {
    if (n > 0) rising *= make_rational(2 * n - 1, 2);
    const HPReal g = testing::mpfr_gamma_of(make_rational(2 * n + 3, 4), prec);
    const HPReal expected = HPReal(rising * rising, prec) * sqrt(testing::mpfr_pi(prec)) / (g * g);
    const HPReal got = testing::oracle_real(zjet_at_half(n), prec);
    EXPECT_LT(abs(got - expected) / expected, testing::two_pow(-240)) << n;
  }
}

TEST(EllipticExpr, RingAxiomsOnRandomInstances) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const EllipticExpr a = random_expr(rng), b = random_expr(rng), c = random_expr(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(EllipticExpr, LeibnizRule) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const EllipticExpr a = random_expr(rng), b = random_expr(rng);
    EXPECT_EQ((a * b).diff_x(), a.diff_x() * b + a * b.diff_x());
  }
}

TEST(EllipticExpr, EvaluationIsARingHomomorphism) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const EllipticExpr a = random_expr(rng), b = random_expr(rng);
    EXPECT_EQ((a * b).eval_at_half(), a.eval_at_half() * b.eval_at_half());
    EXPECT_EQ((a + b).eval_at_half(), a.eval_at_half() + b.eval_at_half());
  }
}

TEST(EllipticExpr, JetReductionPreservesValueAtHalf) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const EllipticExpr a = random_expr(rng);
    const EllipticExpr reduced = a.reduce_jets();
    EXPECT_LE(reduced.max_jet(), 1);
    EXPECT_EQ(reduced.eval_at_half(), a.eval_at_half());
  }
}

TEST(EllipticExpr, SigmaPrimeSquared) {
  const Poly sigma{0, 1, -1};
  EXPECT_EQ(sigma.derivative() * sigma.derivative(), Poly(1) - Rational(4) * sigma);
  const EllipticExpr s = EllipticExpr::sigma();
  EXPECT_EQ(s.diff_x() * s.diff_x(), EllipticExpr(1) - Rational(4) * s);
}

TEST(EllipticExpr, GeneratorsAndDerivatives) {
  const EllipticExpr r = EllipticExpr::r();
  const EllipticExpr x = EllipticExpr::x();
  EXPECT_EQ(r * r, EllipticExpr(1) - x);
  EXPECT_EQ(r.eval_at_half(), ClosedFormValue::monomial(make_rational(1, 2), 0, 0, true));
  EXPECT_EQ(EllipticExpr::z().diff_x(), EllipticExpr::z(1));
  // d(r^2)/dx = -1
  EXPECT_EQ((r * r).diff_x(), EllipticExpr(-1));
  // dx/dy = -x(1-x) z^2
  EXPECT_EQ(x.diff_y(), -(EllipticExpr::sigma() * EllipticExpr::z(0, 2)));
}

TEST(EllipticExpr, PoleAtHalfIsReported) {
  const EllipticExpr e(RatFunX(Poly{1}, Poly{make_rational(-1, 2), 1}));
  EXPECT_THROW(e.eval_at_half(), PoleAtHalf);
}

TEST(Serialize, ClosedFormJsonShape) {
  const ClosedFormValue v = testing::gp(make_rational(3, 8), 8, -2);
  const nlohmann::json j = to_json(v);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["coeff"], "3/8");
  EXPECT_EQ(j[0]["gamma_exp"], 8);
  EXPECT_EQ(j[0]["pi_half_exp"], -4);
  EXPECT_EQ(j[0]["sqrt2"], false);
}

TEST(Serialize, RoundTrips) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const EllipticExpr e = random_expr(rng) * EllipticExpr(RatFunX(Poly{1}, Poly{-1, 1}));
    EXPECT_EQ(elliptic_expr_from_json(nlohmann::json::parse(to_json(e).dump())), e);
    const ClosedFormValue v = e.eval_at_half();
    EXPECT_EQ(closed_form_from_json(nlohmann::json::parse(to_json(v).dump())), v);
  }
  const Poly p{make_rational(1, 3), 0, -7};
  EXPECT_EQ(poly_from_json(to_json(p)), p);
}

}  // namespace
}  // namespace berndt
