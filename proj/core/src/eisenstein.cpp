#include "berndt/eisenstein.hpp"

#include <cmath>

#include "berndt/errors.hpp"
#include "berndt/summation.hpp"

namespace berndt {

namespace {

EllipticExpr poly_expr(std::initializer_list<Rational> coefficients) {
  return EllipticExpr(RatFunX(Poly(coefficients)));
}

}  // namespace

EisensteinTriple eisenstein_PQR() {
  using E = EllipticExpr;
  EisensteinTriple t;
  t.P = poly_expr({1, -2}) * E::z(0, 2) + E::sigma() * Rational(6) * E::z(0) * E::z(1);
  t.Q = poly_expr({1, -1, 1}) * E::z(0, 4);
  // (1 + x)(1 - x/2)(1 - 2x) = 1 - 3x/2 - 3x^2/2 + x^3
  t.R = poly_expr({1, make_rational(-3, 2), make_rational(-3, 2), 1}) * E::z(0, 6);
  return t;
}

SeriesTable& SeriesTable::shared() {
  static SeriesTable table;
  return table;
}

const EllipticExpr& SeriesTable::s(int k) {
  std::lock_guard lock(mutex_);
  return s_locked(k);
}

const EllipticExpr& SeriesTable::s_locked(int k) {
  if (k < 1 || k % 2 == 0) throw InvalidArgument("S_k needs odd k >= 1");
  if (auto it = s_.find(k); it != s_.end()) return it->second;

  EllipticExpr value;
  if (k <= 5) {
    const auto pqr = eisenstein_PQR();
    if (k == 1) value = pqr.P * make_rational(-1, 24);
    if (k == 3) value = pqr.Q * make_rational(1, 240);
    if (k == 5) value = pqr.R * make_rational(-1, 504);
  } else {
    // k = 2n + 3 with n >= 2:
    // (2n+5)(n-1) / (12(2n+1)(n+1)) S_{2n+3} = sum_{j=1}^{n-1} C(2n,2j) S_{2j+1} S_{2n-2j+1}
    const long n = (k - 3) / 2;
    EllipticExpr sum;
    for (long j = 1; j <= n - 1; ++j) {
      // Symmetric in j <-> n - j; pair the terms to halve the products.
      if (2 * j > n) break;
      EllipticExpr product = s_locked(2 * j + 1) * s_locked(2 * (n - j) + 1);
      Rational weight(binomial(2 * n, 2 * j));
      if (2 * j != n) weight *= 2;
      sum += product * weight;
    }
    value = sum * make_rational(12 * (2 * n + 1) * (n + 1), (2 * n + 5) * (n - 1));
  }
  return s_.emplace(k, std::move(value)).first->second;
}

const EllipticExpr& SeriesTable::phi(int m) {
  std::lock_guard lock(mutex_);
  if (m < 1) throw InvalidArgument("Phi_{1,2m} needs m >= 1");
  if (auto it = phi_.find(m); it != phi_.end()) return it->second;

  EllipticExpr value;
  if (m == 1) {
    const auto pqr = eisenstein_PQR();
    value = (pqr.Q - pqr.P * pqr.P) * make_rational(1, 288);
  } else {
    // (2n+3)/(2(2n+1)) S_{2n+1} - Phi_{1,2n} = sum_{k=1}^n C(2n,2k-1) S_{2k-1} S_{2n-2k+1}
    const long n = m;
    EllipticExpr sum;
    for (long k = 1; k <= n; ++k) {
      const long left = 2 * k - 1;
      const long right = 2 * n - 2 * k + 1;
      if (left > right) break;
      Rational weight(binomial(2 * n, 2 * k - 1));
      if (left != right) weight *= 2;
      sum += s_locked(left) * s_locked(right) * weight;
    }
    value = s_locked(2 * n + 1) * make_rational(2 * n + 3, 2 * (2 * n + 1)) - sum;
  }
  return phi_.emplace(m, std::move(value)).first->second;
}

EllipticExpr s_series(int m) { return SeriesTable::shared().s(2 * m - 1); }

EllipticExpr phi_series(int m) { return SeriesTable::shared().phi(m); }

HPReal phi_numeric(int a, int m, const HPReal& q, long prec) {
  if (a < 0 || m < 0) throw InvalidArgument("phi_numeric needs a, m >= 0");
  if (q.sign() <= 0 || !(q < HPReal(1L, q.prec()))) throw InvalidArgument("phi_numeric needs 0 < q < 1");
  // n^m q^2n / (1 - q^2n)^(a+1) <= n^m q^2n / (1 - q^2)^(a+1)
  const double qd = q.to_double();
  const double lambda = -2 * std::log(qd);
  const double log2_c = -(a + 1) * std::log2(1 - qd * qd);
  auto majorant = [=](long n) {
    return log2_exp_majorant(log2_c, m, lambda, static_cast<double>(n));
  };
  auto term = [&](long n, long wp) {
    HPReal q2n = pow(q.with_prec(wp), 2 * n);
    HPReal denominator = pow(HPReal(1L, wp) - q2n, a + 1);
    return pow(HPReal(n, wp), m) * q2n / denominator;
  };
  return sum_with_tail(term, majorant, 1, prec).value;
}

}  // namespace berndt
