#pragma once

#include "berndt/closed_form.hpp"
#include "berndt/hpreal.hpp"

namespace berndt {

// Fundamental constants at the requested precision. Values are computed
// with 32 guard bits, rounded once, and cached per precision (thread-safe).
HPReal pi(long prec);
HPReal sqrt2(long prec);
// Gamma(1/4) through the lemniscatic identity
//   Gamma(1/4) = (2 pi)^(3/4) / sqrt(AGM(1, sqrt 2)).
HPReal gamma_quarter(long prec);

// Arithmetic-geometric mean iterated at the operands' precision until the
// two sequences agree to within one ulp.
HPReal agm(HPReal a, HPReal b);

// Evaluates a closed form with absolute error below 2^-prec. The working
// precision is raised by the magnitude of the largest monomial so that
// cancellation between terms stays covered.
HPReal to_real(const ClosedFormValue& value, long prec);

}  // namespace berndt
