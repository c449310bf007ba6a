#include "reference.hpp"

#include "berndt/zjet.hpp"

namespace berndt::cli::reference {

namespace {

// numerator / (odd * 2^two)
Rational frac(const char* numerator, long odd, int two) {
  return Rational(Integer(numerator)) / (Rational(odd) * pow2(two));
}

// c * Gamma(1/4)^g * pi^pe
ClosedFormValue term(const Rational& c, int g, int pe) {
  return ClosedFormValue::monomial(c, g, 2 * pe);
}

}  // namespace

std::vector<IndexedRational> alpha_table() {
  return {
      {2, frac("1", 3, 9)},           {4, frac("1", 5, 8)},
      {6, frac("1", 7, 14)},          {8, frac("3", 5, 14)},
      {10, frac("9", 11, 20)},        {12, frac("567", 65, 20)},
      {14, frac("27", 1, 26)},        {16, frac("43659", 85, 26)},
      {18, frac("49329", 19, 32)},    {20, frac("392931", 5, 32)},
  };
}

std::vector<IndexedRational> beta_table() {
  return {
      {3, frac("1", 1, 10)},         {5, frac("1", 3, 16)},
      {7, frac("1", 1, 15)},         {9, frac("1", 1, 22)},
      {11, frac("9", 1, 21)},        {13, frac("171", 7, 28)},
      {15, frac("405", 1, 27)},      {17, frac("1809", 1, 34)},
      {19, frac("49329", 1, 33)},    {21, frac("3797847", 11, 40)},
      {23, frac("13895469", 1, 39)},
  };
}

std::vector<IndexedRational> gamma_table() {
  return {
      {3, frac("-1", 1, 4)},         {5, frac("1", 1, 10)},
      {7, Rational(0)},              {9, frac("27", 5, 16)},
      {11, Rational(0)},             {13, frac("567", 5, 22)},
      {15, Rational(0)},             {17, frac("43659", 5, 28)},
      {19, Rational(0)},             {21, frac("8251551", 5, 34)},
      {23, Rational(0)},
  };
}

std::vector<HalfRowEntry> phi_half_row() {
  const ClosedFormValue z = zjet_at_half(0);
  const ClosedFormValue z1 = zjet_at_half(1);
  auto zz = [&](const Rational& c, int a, int b) { return c * (z.pow(a) * z1.pow(b)); };
  return {
      {2, zz(make_rational(1, 96), 4, 0) - zz(make_rational(3, 96), 2, 2)},
      {4, zz(make_rational(1, 160), 5, 1)},
      {6, zz(make_rational(1, 448), 8, 0)},
      {8, zz(make_rational(3, 640), 9, 1)},
      {10, zz(make_rational(9, 2816), 12, 0)},
      {12, zz(make_rational(567, 33280), 13, 1)},
      {14, zz(make_rational(27, 1024), 16, 0)},
      {16, zz(make_rational(43659, 174080), 17, 1)},
      {18, zz(make_rational(49329, 77824), 20, 0)},
      {20, zz(make_rational(392931, 40960), 21, 1)},
  };
}

std::vector<IndexedClosedForm> minus2_table() {
  auto row = [](int p, const Rational& i, const Rational& j) {
    return IndexedClosedForm{p, term(i, 8 * p, -2 * p) + term(j, 8 * p + 8, -2 * p - 4)};
  };
  return {
      row(1, frac("-1", 1, 8), frac("1", 3, 14)),
      row(2, frac("27", 5, 12), frac("-1", 1, 18)),
      row(3, frac("-567", 5, 16), frac("171", 7, 22)),
      row(4, frac("43659", 5, 20), frac("-1809", 1, 26)),
      row(5, frac("-8251551", 5, 24), frac("3797847", 11, 30)),
      row(6, frac("8622870795", 13, 28), frac("-138429081", 1, 34)),
      row(7, frac("-2498907956391", 5, 32), frac("104367224493", 1, 38)),
  };
}

std::vector<IndexedClosedForm> plus2_table() {
  auto row = [](int p, const Rational& g, const Rational& h) {
    return IndexedClosedForm{p, term(g, 8 * p, -2 * p) + term(h, 8 * p + 8, -2 * p - 4)};
  };
  return {
      row(0, frac("-1", 1, 3), frac("1", 1, 9)),
      row(1, frac("3", 1, 9), frac("-1", 3, 15)),
      row(2, frac("-189", 5, 15), frac("9", 1, 21)),
      row(3, frac("18711", 5, 21), frac("-5301", 7, 27)),
      row(4, frac("-5544693", 5, 27), frac("233361", 1, 33)),
      row(5, frac("4233045663", 5, 33), frac("-1940699817", 11, 39)),
      row(6, frac("-17651016517365", 13, 39), frac("283641186969", 1, 45)),
      row(7, frac("20473552886711463", 5, 45), frac("-854871935822163", 1, 51)),
  };
}

std::vector<SumValue> printed_sum_values() {
  using F = Family;
  return {
      {{F::SINH2, 0}, ClosedFormValue(make_rational(1, 6)) + term(make_rational(-1, 2), 0, -1)},
      {{F::SINH2, 2}, term(frac("1", 3, 9), 8, -6) + term(make_rational(-1, 8), 0, -2)},
      {{F::SINH2, 4}, term(frac("1", 5, 8), 8, -7)},
      {{F::SINH2, 6}, term(frac("1", 7, 14), 16, -12)},
      {{F::SINH2, 8}, term(frac("3", 5, 14), 16, -13)},
      {{F::SINH2, 10}, term(frac("9", 11, 20), 24, -18)},
      {{F::COSH_SINH3, 5}, term(frac("1", 3, 16), 16, -12) + term(frac("1", 1, 10), 8, -8)},
      {{F::COSH_SINH3, 7}, term(frac("1", 1, 15), 16, -13)},
      {{F::COSH_SINH3, 9}, term(frac("1", 1, 22), 24, -18) + term(frac("27", 5, 16), 16, -14)},
      {{F::COSH_SINH3, 11}, term(frac("9", 1, 21), 24, -19)},
      {{F::COSH2, 2}, term(make_rational(1, 192), 8, -6)},
      {{F::SINH_COSH3, 5}, term(make_rational(3, 64), 8, -8) + term(frac("1", 3, 12), 16, -12)},
      {{F::SINH_COSH3, 7}, term(frac("3", 1, 10), 16, -13)},
      {{F::SINH_COSH3, 9}, term(frac("189", 5, 10), 16, -14) + term(frac("9", 1, 16), 24, -18)},
      {{F::SINH_COSH3, 11}, term(frac("153", 1, 14), 24, -19)},
  };
}

std::vector<Poly> dc_even_polys() {
  return {
      Poly{1},
      Poly{1, -1},
      Poly{5, -6, 1},
      Poly{61, -107, 47, -1},
      Poly{1385, -3116, 2142, -412, 1},
      Poly{50521, -138933, 130250, -45530, 3693, -1},
  };
}

std::vector<Poly> nc_even_polys() {
  return {
      Poly{1},
      Poly{1},
      Poly{5, -4},
      Poly{61, -76, 16},
      Poly{1385, -2424, 1104, -64},
      Poly{50521, -113672, 79728, -16832, 256},
  };
}

std::vector<SumExpression> printed_sum_expressions() {
  using F = Family;
  const EllipticExpr x = EllipticExpr::x();
  const EllipticExpr r = EllipticExpr::r();
  const EllipticExpr z = EllipticExpr::z();
  const EllipticExpr z1 = EllipticExpr::z(1);
  const EllipticExpr one(1);
  const Rational quarter = make_rational(1, 4);
  auto poly = [](Poly p) { return EllipticExpr(RatFunX(std::move(p))); };
  return {
      {{F::ALT_EXP_MINUS, 0}, quarter * z - EllipticExpr(quarter)},
      {{F::ALT_EXP_MINUS, 1}, EllipticExpr(quarter) - quarter * z.pow(3) * (one - x)},
      {{F::ALT_EXP_MINUS, 2}, EllipticExpr(make_rational(-5, 4)) + quarter * z.pow(5) * poly(Poly{5, -6, 1})},
      {{F::ALT_EXP_MINUS, 3},
       EllipticExpr(make_rational(61, 4)) - quarter * z.pow(7) * poly(Poly{61, -107, 47, -1})},
      {{F::ALT_EXP_PLUS, 0}, EllipticExpr(quarter) - quarter * r * z},
      {{F::ALT_EXP_PLUS, 1}, quarter * r * z.pow(3) - EllipticExpr(quarter)},
      {{F::ALT_EXP_PLUS, 2}, EllipticExpr(make_rational(5, 4)) - quarter * r * poly(Poly{5, -4}) * z.pow(5)},
      {{F::ALT_EXP_PLUS, 3},
       EllipticExpr(make_rational(-61, 4)) + quarter * r * poly(Poly{61, -76, 16}) * z.pow(7)},
      {{F::ALT_SINH2, 3}, z.pow(4) * x * (one - x) * (z - Rational(3) * z1 * (one - x))},
      {{F::ALT_COSH2, 3},
       make_rational(-1, 2) * r * x * z.pow(4) * (Rational(6) * (x - one) * z1 + z)},
  };
}

}  // namespace berndt::cli::reference
