#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "berndt/rational.hpp"

namespace berndt {

inline constexpr long kDefaultPrecision = 200;

// Binary floating-point number with a per-value working precision in bits,
// backed by MPFR with round-to-nearest. Arithmetic between two values yields
// the larger of their precisions; comparisons round both operands to the
// smaller precision first.
class HPReal {
 public:
  explicit HPReal(long prec = kDefaultPrecision);
  HPReal(long value, long prec);
  HPReal(double value, long prec);
  HPReal(const Rational& value, long prec);
  static HPReal from_string(const std::string& decimal, long prec);
  // 2^exponent
  static HPReal pow2(long exponent, long prec);

  HPReal(const HPReal& other);
  HPReal(HPReal&& other) noexcept;
  HPReal& operator=(const HPReal& other);
  HPReal& operator=(HPReal&& other) noexcept;
  ~HPReal();

  long prec() const { return static_cast<long>(mpfr_get_prec(value_)); }
  HPReal with_prec(long prec) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  HPReal& operator+=(const HPReal& other);
  HPReal& operator-=(const HPReal& other);
  HPReal& operator*=(const HPReal& other);
  HPReal& operator/=(const HPReal& other);
  HPReal& operator*=(long factor);
  HPReal& operator/=(long divisor);

  friend HPReal operator+(HPReal a, const HPReal& b) { return a += b; }
  friend HPReal operator-(HPReal a, const HPReal& b) { return a -= b; }
  friend HPReal operator*(HPReal a, const HPReal& b) { return a *= b; }
  friend HPReal operator/(HPReal a, const HPReal& b) { return a /= b; }
  friend HPReal operator*(HPReal a, long b) { return a *= b; }
  friend HPReal operator*(long b, HPReal a) { return a *= b; }
  friend HPReal operator/(HPReal a, long b) { return a /= b; }
  HPReal operator-() const;

  friend std::partial_ordering operator<=>(const HPReal& a, const HPReal& b);
  friend bool operator==(const HPReal& a, const HPReal& b) {
    return (a <=> b) == std::partial_ordering::equivalent;
  }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // floor(log2 |x|) + 1, or a very negative number for zero.
  long exponent2() const;
  // Scientific notation with the given number of significant digits.
  std::string to_decimal(int digits) const;
  // Fixed notation with the given number of digits after the point.
  std::string to_fixed(int decimals) const;

 private:
  mpfr_t value_;
};

HPReal abs(const HPReal& x);
HPReal sqrt(const HPReal& x);
HPReal exp(const HPReal& x);
HPReal log(const HPReal& x);
HPReal sin(const HPReal& x);
HPReal cos(const HPReal& x);
HPReal sinh(const HPReal& x);
HPReal cosh(const HPReal& x);
HPReal tanh(const HPReal& x);
HPReal pow(const HPReal& base, long exponent);
HPReal max(const HPReal& a, const HPReal& b);

// Rectangular complex pair used where real arithmetic does not suffice.
struct HPComplex {
  HPReal re;
  HPReal im;

  friend HPComplex operator+(const HPComplex& a, const HPComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend HPComplex operator-(const HPComplex& a, const HPComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend HPComplex operator*(const HPComplex& a, const HPComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend HPComplex operator*(const HPComplex& a, const HPReal& s) { return {a.re * s, a.im * s}; }
};

}  // namespace berndt
