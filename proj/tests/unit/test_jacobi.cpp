#include <gtest/gtest.h>

#include "berndt/jacobi_series.hpp"
#include "berndt/special_numbers.hpp"
#include "reference.hpp"

namespace berndt {
namespace {

const Rational kHalf = make_rational(1, 2);

TEST(JacobiSeries, LeadingMaclaurinCoefficients) {
  const JacobiTriple t = jacobi_sn_cn_dn(6);
  // sn = u - (1+x) u^3/3! + (1 + 14x + x^2) u^5/5!
  EXPECT_EQ(t.sn[1], Poly(1));
  EXPECT_EQ(t.sn[3], (Poly{-1, -1}) * make_rational(1, 6));
  EXPECT_EQ(t.sn[5], (Poly{1, 14, 1}) * make_rational(1, 120));
  // cn = 1 - u^2/2 + (1 + 4x) u^4/4!
  EXPECT_EQ(t.cn[2], Poly(make_rational(-1, 2)));
  EXPECT_EQ(t.cn[4], (Poly{1, 4}) * make_rational(1, 24));
  // dn = 1 - x u^2/2 + x(4 + x) u^4/4!
  EXPECT_EQ(t.dn[2], (Poly{0, make_rational(-1, 2)}));
  EXPECT_EQ(t.dn[4], (Poly{0, 4, 1}) * make_rational(1, 24));
}

TEST(JacobiSeries, PythagoreanIdentities) {
  const int order = 36;
  const JacobiTriple t = jacobi_sn_cn_dn(order);
  SeriesQx xs(order);
  xs[0] = Poly::x();
  const SeriesQx a = t.sn * t.sn + t.cn * t.cn;
  const SeriesQx b = xs * t.sn * t.sn + t.dn * t.dn;
  for (int k = 0; k <= order; ++k) {
    EXPECT_EQ(a[k], Poly(k == 0 ? 1 : 0)) << k;
    EXPECT_EQ(b[k], Poly(k == 0 ? 1 : 0)) << k;
  }
}

TEST(JacobiSeries, ReciprocalInvertsCn) {
  const JacobiTriple t = jacobi_sn_cn_dn(20);
  const SeriesQx product = t.cn * t.cn.reciprocal();
  for (int k = 0; k <= 20; ++k) EXPECT_EQ(product[k], Poly(k == 0 ? 1 : 0));
}

TEST(JacobiTable, NcCoefficientsAreIntegral) {
  for (int m = 0; m <= 24; ++m) EXPECT_TRUE(JacobiTable::shared().f(m).has_integer_coefficients()) << m;
}

TEST(JacobiTable, OddIndicesVanish) {
  auto& t = JacobiTable::shared();
  for (int m = 1; m <= 25; m += 2) {
    EXPECT_TRUE(t.f(m).is_zero()) << m;
    EXPECT_TRUE(t.p(m).is_zero()) << m;
    EXPECT_TRUE(t.q(m).is_zero()) << m;
  }
}

// x = 0 degenerates to the circular functions, x = 1 to the hyperbolic ones:
// nc -> sec | cosh, dc -> sec | 1, u ds -> u/sin u | u/sinh u.
TEST(JacobiTable, DegenerateModuli) {
  auto& t = JacobiTable::shared();
  const Rational zero = 0, one = 1;
  for (int j = 0; j <= 10; ++j) {
    const int m = 2 * j;
    EXPECT_EQ(t.f(m)(zero), euler_number(j)) << m;
    EXPECT_EQ(t.f(m)(one), 1) << m;
    EXPECT_EQ(t.p(m)(zero), euler_number(j)) << m;
    EXPECT_EQ(t.p(m)(one), m == 0 ? 1 : 0) << m;
    const Rational b = bernoulli(m);
    const Rational factor = pow2(m) - 2;
    EXPECT_EQ(t.q(m)(zero), (j % 2 == 1 ? 1 : -1) * factor * b) << m;
    EXPECT_EQ(t.q(m)(one), -factor * b) << m;
  }
}

TEST(JacobiTable, LowOrderNc) {
  auto& t = JacobiTable::shared();
  EXPECT_EQ(t.f(2), Poly(1));
  EXPECT_EQ(t.f(4), (Poly{5, -4}));
}

TEST(JacobiTable, PrintedDcAndNcPolynomials) {
  auto& t = JacobiTable::shared();
  const auto dc = cli::reference::dc_even_polys();
  const auto nc = cli::reference::nc_even_polys();
  ASSERT_EQ(dc.size(), 6u);
  ASSERT_EQ(nc.size(), 6u);
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(t.p(2 * i), dc[static_cast<std::size_t>(i)]) << 2 * i;
    EXPECT_EQ(t.f(2 * i), nc[static_cast<std::size_t>(i)]) << 2 * i;
  }
}

TEST(JacobiTable, QSymmetryAndVanishingAtHalf) {
  auto& t = JacobiTable::shared();
  for (int j = 0; 2 * j <= 36; ++j) {
    const Poly q = t.q(2 * j);
    EXPECT_EQ(q.compose_affine(1, -1), j % 2 == 0 ? q : -q) << 2 * j;
  }
  for (int m = 1; 4 * m <= 36; ++m) {
    EXPECT_EQ(t.q(4 * m - 2)(kHalf), 0) << m;
    EXPECT_EQ(t.q(4 * m).derivative()(kHalf), 0) << m;
    EXPECT_EQ(t.q(4 * m - 2).derivative().derivative()(kHalf), 0) << m;
  }
}

TEST(JacobiTable, GrowingTheCacheKeepsValues) {
  JacobiTable local;
  const Poly f10 = local.f(10);
  local.reserve(40);
  EXPECT_EQ(local.f(10), f10);
  EXPECT_EQ(local.q(12), JacobiTable::shared().q(12));
}

}  // namespace
}  // namespace berndt
