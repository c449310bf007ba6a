#include "berndt/special_numbers.hpp"

#include "berndt/errors.hpp"

namespace berndt {

std::vector<Rational> bernoulli_table(int n) {
  if (n < 0) throw InvalidArgument("bernoulli index must be nonnegative");
  // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1.
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (int k = 0; k < m; ++k) {
      if (k > 1 && k % 2 == 1) continue;  // odd B_k vanish beyond B_1
      acc += Rational(binomial(static_cast<unsigned long>(m + 1), static_cast<unsigned long>(k))) *
             b[static_cast<std::size_t>(k)];
    }
    b[static_cast<std::size_t>(m)] = (m > 1 && m % 2 == 1) ? Rational(0) : -acc / (m + 1);
  }
  return b;
}

Rational bernoulli(int n) { return bernoulli_table(n).back(); }

std::vector<Integer> euler_table(int n) {
  if (n < 0) throw InvalidArgument("euler index must be nonnegative");
  // sec(x) cos(x) = 1 gives sum_{k=0}^{m} C(2m, 2k) (-1)^(m-k) E_k = 0.
  std::vector<Integer> e(static_cast<std::size_t>(n) + 1);
  e[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Integer acc = 0;
    for (int k = 0; k < m; ++k) {
      Integer term = binomial(static_cast<unsigned long>(2 * m), static_cast<unsigned long>(2 * k)) *
                     e[static_cast<std::size_t>(k)];
      if ((m - k) % 2 == 1) acc -= term;
      else acc += term;
    }
    e[static_cast<std::size_t>(m)] = -acc;
  }
  return e;
}

Integer euler_number(int n) { return euler_table(n).back(); }

}  // namespace berndt
