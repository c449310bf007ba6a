#pragma once

#include "berndt/closed_form.hpp"

namespace berndt {

// n-th x-derivative of z = (2/pi) K at x = 1/2,
//   (1/2)_n^2 sqrt(pi) / Gamma(n/2 + 3/4)^2,
// reduced with Gamma(3/4) = sqrt(2) pi / Gamma(1/4) and
// Gamma(5/4) = Gamma(1/4) / 4 to a single Gamma(1/4)/pi monomial.
ClosedFormValue zjet_at_half(int n);

}  // namespace berndt
