#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "berndt/rational.hpp"

namespace berndt {

// Dense univariate polynomial in x over Q. Coefficients are stored from the
// constant term upward with no trailing zeros; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coefficients);
  explicit Poly(std::vector<Rational> coefficients);
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant);             // NOLINT(google-explicit-constructor)

  static Poly x();
  // c * x^n
  static Poly monomial(const Rational& c, int n);

  bool is_zero() const { return coefficients_.empty(); }
  bool is_constant() const { return coefficients_.size() <= 1; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  // Coefficient of x^n, zero beyond the degree.
  Rational coefficient(int n) const;
  const Rational& leading() const { return coefficients_.back(); }

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coefficients_ == b.coefficients_;
  }

  Poly derivative() const;
  Rational operator()(const Rational& at) const;
  // p(a + b x)
  Poly compose_affine(const Rational& a, const Rational& b) const;
  Poly pow(int exponent) const;
  Poly monic() const;
  bool has_integer_coefficients() const;

  // Euclidean division; throws InvalidArgument on a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);
  // Monic greatest common divisor (zero if both inputs are zero).
  static Poly gcd(Poly a, Poly b);

  std::string to_string(const char* variable = "x") const;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

}  // namespace berndt
