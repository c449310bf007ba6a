#pragma once

#include <string>

#include "berndt/poly.hpp"

namespace berndt {

// Rational function num(x)/den(x) over Q, kept reduced with a monic
// denominator. Coefficients of elliptic expressions live here because
// differentiating sqrt(1-x) produces (1-x) denominators.
class RatFunX {
 public:
  RatFunX() : den_(1) {}
  RatFunX(Poly numerator);  // NOLINT(google-explicit-constructor)
  RatFunX(const Rational& constant) : RatFunX(Poly(constant)) {}  // NOLINT
  RatFunX(long constant) : RatFunX(Poly(constant)) {}              // NOLINT
  RatFunX(Poly numerator, Poly denominator);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunX& operator+=(const RatFunX& other);
  RatFunX& operator-=(const RatFunX& other);
  RatFunX& operator*=(const RatFunX& other);
  RatFunX& operator*=(const Rational& scalar);
  RatFunX& operator/=(const RatFunX& other);

  friend RatFunX operator+(RatFunX a, const RatFunX& b) { return a += b; }
  friend RatFunX operator-(RatFunX a, const RatFunX& b) { return a -= b; }
  friend RatFunX operator*(RatFunX a, const RatFunX& b) { return a *= b; }
  friend RatFunX operator/(RatFunX a, const RatFunX& b) { return a /= b; }
  RatFunX operator-() const;

  friend bool operator==(const RatFunX& a, const RatFunX& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunX derivative() const;
  // Throws PoleAtHalf when the denominator vanishes at the point.
  Rational operator()(const Rational& at) const;
  bool has_pole_at(const Rational& at) const;

  std::string to_string() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

}  // namespace berndt
