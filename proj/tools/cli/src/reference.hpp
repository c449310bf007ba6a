#pragma once

// Published values the verify suite and `tables` compare against.

#include <vector>

#include "berndt/closed_form.hpp"
#include "berndt/elliptic_expr.hpp"
#include "berndt/hyperbolic_sums.hpp"
#include "berndt/poly.hpp"

namespace berndt::cli::reference {

struct IndexedRational {
  int k;
  Rational value;
};

std::vector<IndexedRational> alpha_table();  // k = 2, 4, ..., 20
std::vector<IndexedRational> beta_table();   // k = 3, 5, ..., 23
std::vector<IndexedRational> gamma_table();  // k = 3, 5, ..., 23

// 4 Phi_{1,k} at x = 1/2 written in z, z' (k = 2, 4, ..., 20), evaluated.
struct HalfRowEntry {
  int k;
  ClosedFormValue value;
};
std::vector<HalfRowEntry> phi_half_row();

struct IndexedClosedForm {
  int index;
  ClosedFormValue value;
};
std::vector<IndexedClosedForm> minus2_table();  // p = 1..7
std::vector<IndexedClosedForm> plus2_table();   // p = 0..7

struct SumValue {
  SumFamily sum;
  ClosedFormValue value;
};
std::vector<SumValue> printed_sum_values();

// m! [u^m] of dc and nc for m = 0, 2, ..., 10.
std::vector<Poly> dc_even_polys();
std::vector<Poly> nc_even_polys();

struct SumExpression {
  SumFamily sum;
  EllipticExpr expr;
};
// Low-order alternating sums written in x, r = sqrt(1 - x), z, z'.
std::vector<SumExpression> printed_sum_expressions();

}  // namespace berndt::cli::reference
