#pragma once

#include <compare>
#include <map>
#include <string>

#include "berndt/rational.hpp"

namespace berndt {

// Exponents of one closed-form monomial Gamma(1/4)^gamma_exp *
// pi^(pi_half_exp/2) * sqrt(2)^(sqrt2 ? 1 : 0). Ordered lexicographically.
struct MonomialKey {
  int gamma_exp = 0;
  int pi_half_exp = 0;
  bool sqrt2 = false;

  friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
};

std::string to_string(const MonomialKey& key);

// Finite Q-linear combination of Gamma(1/4)/pi/sqrt(2) monomials. No zero
// coefficients are stored and integer powers of two live in the coefficient,
// so two values are equal exactly when their term maps are equal.
class ClosedFormValue {
 public:
  using Terms = std::map<MonomialKey, Rational>;

  ClosedFormValue() = default;
  ClosedFormValue(const Rational& constant);  // NOLINT(google-explicit-constructor)
  ClosedFormValue(long constant) : ClosedFormValue(Rational(constant)) {}  // NOLINT

  static ClosedFormValue monomial(const Rational& coefficient, MonomialKey key);
  static ClosedFormValue monomial(const Rational& coefficient, int gamma_exp,
                                  int pi_half_exp, bool sqrt2 = false) {
    return monomial(coefficient, MonomialKey{gamma_exp, pi_half_exp, sqrt2});
  }
  // pi^(half_exp / 2)
  static ClosedFormValue pi_power(int half_exp) { return monomial(1, 0, half_exp); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const MonomialKey& key) const;
  Rational coefficient(int gamma_exp, int pi_half_exp, bool sqrt2 = false) const {
    return coefficient(MonomialKey{gamma_exp, pi_half_exp, sqrt2});
  }

  ClosedFormValue& operator+=(const ClosedFormValue& other);
  ClosedFormValue& operator-=(const ClosedFormValue& other);
  ClosedFormValue& operator*=(const Rational& scalar);
  friend ClosedFormValue operator+(ClosedFormValue a, const ClosedFormValue& b) { return a += b; }
  friend ClosedFormValue operator-(ClosedFormValue a, const ClosedFormValue& b) { return a -= b; }
  friend ClosedFormValue operator*(const ClosedFormValue& a, const ClosedFormValue& b);
  friend ClosedFormValue operator*(ClosedFormValue a, const Rational& s) { return a *= s; }
  friend ClosedFormValue operator*(const Rational& s, ClosedFormValue a) { return a *= s; }
  ClosedFormValue operator-() const;
  ClosedFormValue pow(int exponent) const;

  friend bool operator==(const ClosedFormValue& a, const ClosedFormValue& b) {
    return a.terms_ == b.terms_;
  }

  // Human-readable form, e.g. "1/6 - 1/2*pi^-1". G stands for Gamma(1/4).
  std::string to_string() const;

 private:
  void add_term(MonomialKey key, const Rational& coefficient);
  Terms terms_;
};

}  // namespace berndt
