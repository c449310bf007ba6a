#include "berndt/summation.hpp"

#include <algorithm>
#include <cmath>

#include "berndt/errors.hpp"

namespace berndt {

namespace {

constexpr long kGuardBits = 32;
constexpr long kTailBits = 16;
constexpr long kMaxTerms = 10'000'000;

}  // namespace

double log2_exp_majorant(double log2_c, double s, double lambda, double u) {
  return log2_c + s * std::log2(u) - lambda * u / std::log(2.0);
}

SeriesSum sum_with_tail(const SeriesTerm& term, const Log2Majorant& log2_majorant, long first,
                        long prec) {
  // First pass in double: locate the cut-off and the peak magnitude.
  const double target = -static_cast<double>(prec + kTailBits);
  double peak = -1e300;
  double tail_log2 = 0;
  long last = first;
  for (long n = first;; ++n) {
    if (n - first > kMaxTerms) throw PrecisionUnreachable("series majorant does not decay");
    const double here = log2_majorant(n);
    const double next = log2_majorant(n + 1);
    const double log2_ratio = next - here;
    if (log2_ratio < 0) {
      // Sum of the geometric majorant from n on, with one bit of slack for
      // rounding in the double computation.
      tail_log2 = here - std::log2(1 - std::exp2(log2_ratio)) + 1;
      if (tail_log2 < target) {
        last = n;
        break;
      }
    }
    peak = std::max(peak, here);
  }
  const long magnitude = peak > 0 ? static_cast<long>(std::ceil(peak)) : 0;
  const long count = last - first;
  const long wp = prec + kGuardBits + magnitude +
                  static_cast<long>(std::ceil(std::log2(static_cast<double>(count + 2))));

  HPReal sum(wp);
  for (long n = first; n < last; ++n) sum += term(n, wp);
  return SeriesSum{std::move(sum),
                   HPReal::pow2(static_cast<long>(std::ceil(tail_log2)), wp), count, wp};
}

}  // namespace berndt
