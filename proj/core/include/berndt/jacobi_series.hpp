#pragma once

#include <mutex>
#include <vector>

#include "berndt/poly.hpp"

namespace berndt {

// Truncated power series c_0 + c_1 u + ... + c_N u^N with coefficients in
// Q[x]. Results of binary operations are truncated at the smaller order.
class SeriesQx {
 public:
  explicit SeriesQx(int order = 0);
  SeriesQx(std::vector<Poly> coefficients, int order);

  int order() const { return order_; }
  const Poly& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  Poly& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<Poly>& coefficients() const { return c_; }

  friend SeriesQx operator+(const SeriesQx& a, const SeriesQx& b);
  friend SeriesQx operator-(const SeriesQx& a, const SeriesQx& b);
  friend SeriesQx operator*(const SeriesQx& a, const SeriesQx& b);
  friend bool operator==(const SeriesQx& a, const SeriesQx& b) = default;

  // 1 / s; the constant term must be 1.
  SeriesQx reciprocal() const;
  // s / u^k; the first k coefficients must vanish. Order drops by k.
  SeriesQx divide_by_u(int k) const;
  // Same series cut to a lower order.
  SeriesQx truncate(int order) const;

 private:
  int order_;
  std::vector<Poly> c_;
};

struct JacobiTriple {
  SeriesQx sn;
  SeriesQx cn;
  SeriesQx dn;
};

// Maclaurin series of sn, cn, dn in u with parameter x = k^2, obtained by
// integrating sn' = cn dn, cn' = -sn dn, dn' = -x sn cn term by term.
JacobiTriple jacobi_sn_cn_dn(int order);

// m! [u^m] of nc(u) = 1/cn(u), for m = 0..order (f_m).
std::vector<Poly> nc_series(int order);
// m! [u^m] of dc(u) = dn(u)/cn(u) (p_m).
std::vector<Poly> dc_series(int order);
// m! [u^m] of u ds(u) = u dn(u)/sn(u) (q_m).
std::vector<Poly> uds_series(int order);

// Shared read-mostly cache of the three polynomial families. Requests
// beyond the cached order rebuild the whole table at a larger order.
class JacobiTable {
 public:
  Poly f(int m);
  Poly p(int m);
  Poly q(int m);
  void reserve(int order);

  static JacobiTable& shared();

 private:
  void ensure(int order);
  std::mutex mutex_;
  int order_ = -1;
  std::vector<Poly> f_;
  std::vector<Poly> p_;
  std::vector<Poly> q_;
};

}  // namespace berndt
