#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "berndt/closed_form.hpp"
#include "berndt/ratfun.hpp"

namespace berndt {

// Monomial r^r_exp * prod_j z_j^jets[j], where r = sqrt(1 - x) and z_j is the
// j-th x-derivative of z = (2/pi) K. Canonical keys have r_exp in {0, 1} and
// no trailing zero jet exponents.
struct ExprKey {
  int r_exp = 0;
  std::vector<int> jets;

  friend auto operator<=>(const ExprKey&, const ExprKey&) = default;

  int jet(std::size_t j) const { return j < jets.size() ? jets[j] : 0; }
  int z_degree() const;  // total jet degree
};

// Element of Q(x)[r, z_0, z_1, ...] with r^2 = 1 - x. Immutable value type;
// all operations return canonical forms.
class EllipticExpr {
 public:
  using Terms = std::map<ExprKey, RatFunX>;

  EllipticExpr() = default;
  EllipticExpr(RatFunX coefficient);  // NOLINT(google-explicit-constructor)
  EllipticExpr(const Rational& constant) : EllipticExpr(RatFunX(constant)) {}  // NOLINT
  EllipticExpr(long constant) : EllipticExpr(RatFunX(constant)) {}              // NOLINT

  static EllipticExpr term(RatFunX coefficient, ExprKey key);
  static EllipticExpr x();
  // sigma = x(1 - x)
  static EllipticExpr sigma();
  static EllipticExpr r();
  // j-th derivative of z raised to the given power.
  static EllipticExpr z(int j = 0, int power = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Highest jet index present, -1 for pure rational functions.
  int max_jet() const;

  EllipticExpr& operator+=(const EllipticExpr& other);
  EllipticExpr& operator-=(const EllipticExpr& other);
  EllipticExpr& operator*=(const RatFunX& scalar);
  friend EllipticExpr operator+(EllipticExpr a, const EllipticExpr& b) { return a += b; }
  friend EllipticExpr operator-(EllipticExpr a, const EllipticExpr& b) { return a -= b; }
  friend EllipticExpr operator*(const EllipticExpr& a, const EllipticExpr& b);
  friend EllipticExpr operator*(EllipticExpr a, const RatFunX& s) { return a *= s; }
  friend EllipticExpr operator*(const RatFunX& s, EllipticExpr a) { return a *= s; }
  friend EllipticExpr operator*(EllipticExpr a, const Rational& s) { return a *= RatFunX(s); }
  friend EllipticExpr operator*(const Rational& s, EllipticExpr a) { return a *= RatFunX(s); }
  EllipticExpr operator-() const;
  EllipticExpr pow(int exponent) const;

  friend bool operator==(const EllipticExpr& a, const EllipticExpr& b) {
    return a.terms_ == b.terms_;
  }

  // d/dx with dz_j/dx = z_{j+1} and dr/dx = -r / (2(1 - x)).
  EllipticExpr diff_x() const;
  // d/dy = (dx/dy) d/dx with dx/dy = -x(1 - x) z^2.
  EllipticExpr diff_y() const;

  // Substitutes x = 1/2, r = sqrt(2)/2 and z_j = zjet_at_half(j).
  // Throws PoleAtHalf when a coefficient is singular there.
  ClosedFormValue eval_at_half() const;

  // Rewrites every z_j with j >= 2 through the hypergeometric equation
  // x(1-x) z'' + (1-2x) z' - z/4 = 0, leaving only z and z'.
  EllipticExpr reduce_jets() const;

  std::string to_string() const;

 private:
  void add_term(ExprKey key, const RatFunX& coefficient);
  Terms terms_;
};

}  // namespace berndt
