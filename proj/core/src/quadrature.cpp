#include "berndt/quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "berndt/constants.hpp"
#include "berndt/errors.hpp"

namespace berndt {

namespace {

constexpr long kGuardBits = 32;

// One abscissa pair on [-1, 1]: x = +/-(1 - 2c) with weight w.
struct Node {
  HPReal complement;  // c = 1 / (1 + exp(2u)), u = (pi/2) sinh(t)
  HPReal weight;      // (pi/2) cosh(t) / cosh(u)^2
};

// Nodes new to a level: t = j h for odd j (every j >= 1 at level 0).
using LevelNodes = std::vector<Node>;

class NodeCache {
 public:
  std::shared_ptr<const LevelNodes> get(long wp, int level) {
    std::lock_guard lock(mutex_);
    auto& slot = cache_[{wp, level}];
    if (!slot) slot = std::make_shared<const LevelNodes>(build(wp, level));
    return slot;
  }

 private:
  static LevelNodes build(long wp, int level) {
    LevelNodes nodes;
    const HPReal half_pi = pi(wp) / 2;
    const HPReal h = HPReal::pow2(-level, wp);
    // Weights shrink like c, so stopping at 2^-2wp keeps w f negligible even
    // for f ~ c^(-1/2) at an endpoint.
    const HPReal cutoff = HPReal::pow2(-2 * wp - 24, wp);
    const long step = level == 0 ? 1 : 2;
    for (long j = 1;; j += step) {
      HPReal t = h * j;
      HPReal u = half_pi * sinh(t);
      HPReal e2u = exp(u * 2);
      HPReal c = HPReal(1L, wp) / (e2u + HPReal(1L, wp));
      HPReal ch = cosh(u);
      HPReal w = half_pi * cosh(t) / (ch * ch);
      if (w < cutoff || c.is_zero()) break;
      nodes.push_back({std::move(c), std::move(w)});
    }
    return nodes;
  }

  std::mutex mutex_;
  std::map<std::pair<long, int>, std::shared_ptr<const LevelNodes>> cache_;
};

NodeCache& node_cache() {
  static NodeCache cache;
  return cache;
}

}  // namespace

QuadratureResult tanh_sinh_quadrature(const Integrand& f, const HPReal& a, const HPReal& b,
                                      long prec, const QuadratureOptions& options) {
  const long wp = prec + kGuardBits;
  const long tol_log2 = options.tolerance_log2.value_or(-(prec + 8));
  const HPReal tolerance = HPReal::pow2(tol_log2, wp);
  const HPReal lo = a.with_prec(wp);
  const HPReal hi = b.with_prec(wp);
  const HPReal width = hi - lo;
  const HPReal half_width = width / 2;

  QuadratureResult result{HPReal(wp), HPReal(wp), 0, 0};
  // Weighted sum of f over all nodes used so far (without the h factor).
  HPReal sum = pi(wp) / 2 * f(lo + half_width);
  result.evaluations = 1;
  HPReal previous(wp);
  for (int level = 0; level <= options.max_level; ++level) {
    auto nodes = node_cache().get(wp, level);
    for (const Node& node : *nodes) {
      HPReal offset = width * node.complement;
      HPReal left = f(lo + offset);
      HPReal right = f(hi - offset);
      sum += node.weight * (left + right);
      result.evaluations += 2;
    }
    HPReal estimate = sum * half_width * HPReal::pow2(-level, wp);
    if (level > 0) {
      HPReal delta = abs(estimate - previous);
      if (level >= options.min_level && delta < tolerance) {
        result.value = std::move(estimate);
        result.error_estimate = std::move(delta);
        result.level = level;
        return result;
      }
      result.error_estimate = std::move(delta);
    }
    previous = std::move(estimate);
  }
  throw PrecisionUnreachable("tanh-sinh quadrature stalled at level " +
                             std::to_string(options.max_level) + " with delta " +
                             result.error_estimate.to_decimal(6));
}

}  // namespace berndt
