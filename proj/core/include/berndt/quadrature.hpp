#pragma once

#include <functional>
#include <optional>

#include "berndt/hpreal.hpp"

namespace berndt {

using Integrand = std::function<HPReal(const HPReal&)>;

struct QuadratureOptions {
  // Target is |I_k - I_{k-1}| < 2^tolerance_log2; defaults to -(prec + 8).
  std::optional<long> tolerance_log2;
  int max_level = 12;
  // Levels that must be completed before the delta test is trusted.
  int min_level = 3;
};

struct QuadratureResult {
  HPReal value;
  HPReal error_estimate;  // last inter-level delta
  int level = 0;
  long evaluations = 0;
};

// Double-exponential (tanh-sinh) quadrature of f over [a, b]. The level is
// doubled until successive estimates agree to the tolerance; abscissae are
// computed as distances from the nearer endpoint so endpoint singularities
// such as 1/sqrt(x) are sampled without cancellation. Arithmetic runs at
// prec + 32 bits. Throws PrecisionUnreachable after max_level.
QuadratureResult tanh_sinh_quadrature(const Integrand& f, const HPReal& a, const HPReal& b,
                                      long prec, const QuadratureOptions& options = {});

}  // namespace berndt
