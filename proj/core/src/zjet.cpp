#include "berndt/zjet.hpp"

#include "berndt/errors.hpp"

namespace berndt {

namespace {

// (a)_n for rational a.
Rational pochhammer(const Rational& a, int n) {
  Rational p = 1;
  for (int i = 0; i < n; ++i) p *= a + i;
  return p;
}

}  // namespace

ClosedFormValue zjet_at_half(int n) {
  if (n < 0) throw InvalidArgument("z-jet order must be nonnegative");
  const Rational half_poch = pochhammer(make_rational(1, 2), n);
  const Rational numerator = half_poch * half_poch;
  const int k = n / 2;
  if (n % 2 == 0) {
    // Gamma(k + 3/4)^2 = (3/4)_k^2 * 2 pi^2 / Gamma(1/4)^2
    const Rational p = pochhammer(make_rational(3, 4), k);
    return ClosedFormValue::monomial(numerator / (2 * p * p), 2, -3);
  }
  // Gamma(k + 5/4)^2 = (5/4)_k^2 Gamma(1/4)^2 / 16
  const Rational p = pochhammer(make_rational(5, 4), k);
  return ClosedFormValue::monomial(16 * numerator / (p * p), -2, 1);
}

}  // namespace berndt
