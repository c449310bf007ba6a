#include "berndt/jacobi_series.hpp"

#include <algorithm>

#include "berndt/errors.hpp"
#include "berndt/rational.hpp"

namespace berndt {

SeriesQx::SeriesQx(int order) : order_(order), c_(static_cast<std::size_t>(order) + 1) {
  if (order < 0) throw InvalidArgument("series order must be nonnegative");
}

SeriesQx::SeriesQx(std::vector<Poly> coefficients, int order) : SeriesQx(order) {
  const std::size_t n = std::min(coefficients.size(), c_.size());
  std::move(coefficients.begin(), coefficients.begin() + static_cast<long>(n), c_.begin());
}

SeriesQx operator+(const SeriesQx& a, const SeriesQx& b) {
  SeriesQx s(std::min(a.order_, b.order_));
  for (int k = 0; k <= s.order_; ++k) s[k] = a[k] + b[k];
  return s;
}

SeriesQx operator-(const SeriesQx& a, const SeriesQx& b) {
  SeriesQx s(std::min(a.order_, b.order_));
  for (int k = 0; k <= s.order_; ++k) s[k] = a[k] - b[k];
  return s;
}

SeriesQx operator*(const SeriesQx& a, const SeriesQx& b) {
  SeriesQx s(std::min(a.order_, b.order_));
  for (int i = 0; i <= s.order_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= s.order_; ++j) {
      if (!b[j].is_zero()) s[i + j] += a[i] * b[j];
    }
  }
  return s;
}

SeriesQx SeriesQx::reciprocal() const {
  if (c_[0] != Poly(1)) throw InvalidArgument("series reciprocal needs constant term 1");
  SeriesQx r(order_);
  r[0] = Poly(1);
  for (int k = 1; k <= order_; ++k) {
    Poly acc;
    for (int i = 1; i <= k; ++i) {
      if (!c_[static_cast<std::size_t>(i)].is_zero() && !r[k - i].is_zero()) {
        acc += c_[static_cast<std::size_t>(i)] * r[k - i];
      }
    }
    r[k] = -acc;
  }
  return r;
}

SeriesQx SeriesQx::divide_by_u(int k) const {
  if (k < 0 || k > order_) throw InvalidArgument("cannot divide series by u^k");
  for (int i = 0; i < k; ++i) {
    if (!c_[static_cast<std::size_t>(i)].is_zero()) {
      throw InvalidArgument("series is not divisible by u^k");
    }
  }
  return SeriesQx(std::vector<Poly>(c_.begin() + k, c_.end()), order_ - k);
}

SeriesQx SeriesQx::truncate(int order) const {
  if (order > order_) throw InvalidArgument("cannot extend a truncated series");
  return SeriesQx(c_, order);
}

JacobiTriple jacobi_sn_cn_dn(int order) {
  if (order < 1) throw InvalidArgument("Jacobi series need order >= 1");
  JacobiTriple t{SeriesQx(order), SeriesQx(order), SeriesQx(order)};
  t.cn[0] = Poly(1);
  t.dn[0] = Poly(1);
  const Poly minus_x({Rational(0), Rational(-1)});
  auto product_at = [](const SeriesQx& a, const SeriesQx& b, int k) {
    Poly acc;
    for (int i = 0; i <= k; ++i) {
      if (!a[i].is_zero() && !b[k - i].is_zero()) acc += a[i] * b[k - i];
    }
    return acc;
  };
  for (int k = 0; k < order; ++k) {
    const Rational step = make_rational(1, k + 1);
    t.sn[k + 1] = product_at(t.cn, t.dn, k) * Poly(step);
    t.cn[k + 1] = -(product_at(t.sn, t.dn, k) * Poly(step));
    t.dn[k + 1] = product_at(t.sn, t.cn, k) * minus_x * Poly(step);
  }
  return t;
}

namespace {

std::vector<Poly> scaled_by_factorial(const SeriesQx& s) {
  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(s.order()) + 1);
  for (int m = 0; m <= s.order(); ++m) {
    out.push_back(s[m] * Poly(Rational(factorial(static_cast<unsigned long>(m)))));
  }
  return out;
}

}  // namespace

std::vector<Poly> nc_series(int order) {
  const auto t = jacobi_sn_cn_dn(std::max(order, 1));
  return scaled_by_factorial(t.cn.reciprocal().truncate(order));
}

std::vector<Poly> dc_series(int order) {
  const auto t = jacobi_sn_cn_dn(std::max(order, 1));
  return scaled_by_factorial((t.dn * t.cn.reciprocal()).truncate(order));
}

std::vector<Poly> uds_series(int order) {
  const auto t = jacobi_sn_cn_dn(order + 1);
  const SeriesQx sn_over_u = t.sn.divide_by_u(1);
  return scaled_by_factorial(t.dn.truncate(order) * sn_over_u.reciprocal());
}

JacobiTable& JacobiTable::shared() {
  static JacobiTable table;
  return table;
}

void JacobiTable::ensure(int order) {
  if (order <= order_) return;
  // Grow in steps so successive requests do not rebuild every time.
  const int target = std::max(order, order_ + 16);
  const auto t = jacobi_sn_cn_dn(target + 1);
  const SeriesQx cn = t.cn.truncate(target);
  const SeriesQx dn = t.dn.truncate(target);
  const SeriesQx nc = cn.reciprocal();
  f_ = scaled_by_factorial(nc);
  p_ = scaled_by_factorial(dn * nc);
  q_ = scaled_by_factorial(dn * t.sn.divide_by_u(1).reciprocal());
  order_ = target;
}

void JacobiTable::reserve(int order) {
  std::lock_guard lock(mutex_);
  ensure(order);
}

Poly JacobiTable::f(int m) {
  std::lock_guard lock(mutex_);
  ensure(m);
  return f_.at(static_cast<std::size_t>(m));
}

Poly JacobiTable::p(int m) {
  std::lock_guard lock(mutex_);
  ensure(m);
  return p_.at(static_cast<std::size_t>(m));
}

Poly JacobiTable::q(int m) {
  std::lock_guard lock(mutex_);
  ensure(m);
  return q_.at(static_cast<std::size_t>(m));
}

}  // namespace berndt
