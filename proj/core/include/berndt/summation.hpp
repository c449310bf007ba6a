#pragma once

#include <functional>

#include "berndt/hpreal.hpp"

namespace berndt {

struct SeriesSum {
  HPReal value;
  HPReal tail_bound;  // certified bound on the omitted tail
  long terms = 0;
  long working_prec = 0;
};

// term(n, wp) evaluates the n-th term at working precision wp.
using SeriesTerm = std::function<HPReal(long n, long wp)>;
// Upper bound for log2 |term(n)|, of the shape log2 C + s log2 u - lambda u
// with u affine and increasing in n. For that shape the ratio of
// consecutive bounds decreases monotonically, so once it drops below one
// the remaining tail is dominated by a geometric series.
using Log2Majorant = std::function<double(long n)>;

// Sums term(first) + term(first + 1) + ... until the geometric majorant of
// the remaining tail is below 2^-(prec + 16). The working precision is
// prec + 32 plus the binary magnitude of the largest majorant, so the
// absolute error of the partial sum stays below 2^-prec.
SeriesSum sum_with_tail(const SeriesTerm& term, const Log2Majorant& log2_majorant, long first,
                        long prec);

// log2(C * u^s * exp(-lambda * u)) for u > 0.
double log2_exp_majorant(double log2_c, double s, double lambda, double u);

}  // namespace berndt
