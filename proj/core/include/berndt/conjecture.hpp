#pragma once

#include <vector>

#include "berndt/rational.hpp"

namespace berndt {

// Coefficients of Gamma^8p / pi^2p (i, g) and Gamma^(8p+8) / pi^(2p+4) (j, h)
// in the MINUS2 (i, j) and PLUS2 (g, h) integrals of x^(4p+1).
struct CoefficientQuadruple {
  int p = 0;
  Rational i;
  Rational j;
  Rational g;
  Rational h;
};

// Throws UnexpectedMonomial if either closed form has other monomials.
CoefficientQuadruple coefficients(int p);

struct ConjectureEntry {
  CoefficientQuadruple values;
  // g = -(2^(2p-1) - (-1)^p) / 2^(2p-1) * i
  bool g_relation_ok = false;
  // h = -(2^(2p-1) + (-1)^p) / 2^(2p-1) * j
  bool h_relation_ok = false;
};

std::vector<ConjectureEntry> conjecture_check(int p_max);

}  // namespace berndt
