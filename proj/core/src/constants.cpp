#include "berndt/constants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>

#include "berndt/errors.hpp"

namespace berndt {

namespace {

constexpr long kGuardBits = 32;

class ConstantCache {
 public:
  explicit ConstantCache(std::function<HPReal(long)> compute) : compute_(std::move(compute)) {}

  HPReal get(long prec) {
    std::lock_guard lock(mutex_);
    auto it = values_.find(prec);
    if (it == values_.end()) {
      it = values_.emplace(prec, compute_(prec + kGuardBits).with_prec(prec)).first;
    }
    return it->second;
  }

 private:
  std::function<HPReal(long)> compute_;
  std::mutex mutex_;
  std::map<long, HPReal> values_;
};

HPReal compute_pi(long wp) {
  HPReal r(wp);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

HPReal compute_sqrt2(long wp) { return sqrt(HPReal(2L, wp)); }

HPReal compute_gamma_quarter(long wp) {
  HPReal two_pi = compute_pi(wp) * 2;
  HPReal m = agm(HPReal(1L, wp), compute_sqrt2(wp));
  // (2 pi)^(3/4) = sqrt(2 pi) * sqrt(sqrt(2 pi))
  HPReal root = sqrt(two_pi);
  return root * sqrt(root) / sqrt(m);
}

}  // namespace

HPReal agm(HPReal a, HPReal b) {
  const long prec = std::max(a.prec(), b.prec());
  a = a.with_prec(prec);
  b = b.with_prec(prec);
  HPReal tolerance = HPReal::pow2(-prec + 2, prec);
  for (int iteration = 0; iteration < 200; ++iteration) {
    HPReal mean = (a + b) / 2;
    HPReal geometric = sqrt(a * b);
    a = std::move(mean);
    b = std::move(geometric);
    if (abs(a - b) <= tolerance * abs(a)) break;
  }
  return (a + b) / 2;
}

HPReal pi(long prec) {
  static ConstantCache cache(compute_pi);
  return cache.get(prec);
}

HPReal sqrt2(long prec) {
  static ConstantCache cache(compute_sqrt2);
  return cache.get(prec);
}

HPReal gamma_quarter(long prec) {
  static ConstantCache cache(compute_gamma_quarter);
  return cache.get(prec);
}

HPReal to_real(const ClosedFormValue& value, long prec) {
  if (value.is_zero()) return HPReal(prec);
  // log2 magnitudes of Gamma(1/4) and sqrt(pi), rounded up.
  constexpr double kLog2Gamma = 1.8582;
  constexpr double kLog2SqrtPi = 0.8259;
  double magnitude = 0;
  for (const auto& [key, c] : value.terms()) {
    double m = key.gamma_exp * kLog2Gamma + key.pi_half_exp * kLog2SqrtPi +
               static_cast<double>(mpz_sizeinbase(c.get_num_mpz_t(), 2)) -
               static_cast<double>(mpz_sizeinbase(c.get_den_mpz_t(), 2)) + 2;
    magnitude = std::max(magnitude, m);
  }
  const long wp = prec + kGuardBits + static_cast<long>(std::ceil(magnitude));
  const HPReal gamma = gamma_quarter(wp);
  const HPReal root_pi = sqrt(pi(wp));
  const HPReal root_two = sqrt2(wp);
  HPReal sum(wp);
  for (const auto& [key, c] : value.terms()) {
    HPReal t(c, wp);
    if (key.gamma_exp != 0) t *= pow(gamma, key.gamma_exp);
    if (key.pi_half_exp != 0) t *= pow(root_pi, key.pi_half_exp);
    if (key.sqrt2) t *= root_two;
    sum += t;
  }
  return sum;
}

}  // namespace berndt
