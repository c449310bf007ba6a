#pragma once

#include <map>
#include <mutex>

#include "berndt/elliptic_expr.hpp"
#include "berndt/hpreal.hpp"

namespace berndt {

// Ramanujan's P, Q, R in the variables x and z of the modulus.
struct EisensteinTriple {
  EllipticExpr P;
  EllipticExpr Q;
  EllipticExpr R;
};

EisensteinTriple eisenstein_PQR();

// Memoized S_k (k odd) and Phi_{1,2m}. Entries are built on first request
// under a lock and never modified afterwards, so returned references stay
// valid for the table's lifetime.
class SeriesTable {
 public:
  // S_k = -B_{k+1}/(2(k+1)) + sum n^k q^2n/(1 - q^2n), k odd.
  const EllipticExpr& s(int k);
  // Phi_{1,2m} = sum n^2m q^2n/(1 - q^2n)^2, m >= 1.
  const EllipticExpr& phi(int m);

  static SeriesTable& shared();

 private:
  const EllipticExpr& s_locked(int k);
  std::recursive_mutex mutex_;
  std::map<int, EllipticExpr> s_;
  std::map<int, EllipticExpr> phi_;
};

// S_{2m-1}, m >= 1.
EllipticExpr s_series(int m);
// Phi_{1,2m}, m >= 1.
EllipticExpr phi_series(int m);

// sum_{n>=1} n^m q^2n / (1 - q^2n)^(a+1) with absolute error below 2^-prec.
HPReal phi_numeric(int a, int m, const HPReal& q, long prec);

}  // namespace berndt
