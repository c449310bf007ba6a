#include "berndt/ratfun.hpp"

#include "berndt/errors.hpp"

namespace berndt {

RatFunX::RatFunX(Poly numerator) : num_(std::move(numerator)), den_(1) {}

RatFunX::RatFunX(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
  normalize();
}

void RatFunX::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = Poly::divmod(num_, g).first;
      den_ = Poly::divmod(den_, g).first;
    }
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunX& RatFunX::operator+=(const RatFunX& other) {
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
  }
  normalize();
  return *this;
}

RatFunX& RatFunX::operator-=(const RatFunX& other) {
  if (den_ == other.den_) {
    num_ -= other.num_;
  } else {
    num_ = num_ * other.den_ - other.num_ * den_;
    den_ = den_ * other.den_;
  }
  normalize();
  return *this;
}

RatFunX& RatFunX::operator*=(const RatFunX& other) {
  num_ *= other.num_;
  if (!other.den_.is_constant() || other.den_.leading() != 1) den_ *= other.den_;
  normalize();
  return *this;
}

RatFunX& RatFunX::operator*=(const Rational& scalar) {
  num_ *= scalar;
  if (num_.is_zero()) den_ = Poly(1);
  return *this;
}

RatFunX& RatFunX::operator/=(const RatFunX& other) {
  if (other.is_zero()) throw InvalidArgument("rational function division by zero");
  num_ *= other.den_;
  den_ *= other.num_;
  normalize();
  return *this;
}

RatFunX RatFunX::operator-() const {
  RatFunX negated = *this;
  negated.num_ = -negated.num_;
  return negated;
}

RatFunX RatFunX::derivative() const {
  if (den_.is_constant()) return RatFunX(num_.derivative());
  return RatFunX(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

bool RatFunX::has_pole_at(const Rational& at) const { return den_(at) == 0; }

Rational RatFunX::operator()(const Rational& at) const {
  Rational d = den_(at);
  if (d == 0) {
    throw PoleAtHalf("rational function " + to_string() + " has a pole at x = " +
                     berndt::to_string(at));
  }
  return num_(at) / d;
}

std::string RatFunX::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace berndt
