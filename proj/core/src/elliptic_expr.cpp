#include "berndt/elliptic_expr.hpp"

#include <numeric>
#include <sstream>

#include "berndt/errors.hpp"
#include "berndt/zjet.hpp"

namespace berndt {

namespace {

const Poly& one_minus_x() {
  static const Poly p({Rational(1), Rational(-1)});
  return p;
}

void trim_jets(std::vector<int>& jets) {
  while (!jets.empty() && jets.back() == 0) jets.pop_back();
}

}  // namespace

int ExprKey::z_degree() const { return std::accumulate(jets.begin(), jets.end(), 0); }

EllipticExpr::EllipticExpr(RatFunX coefficient) { add_term(ExprKey{}, coefficient); }

EllipticExpr EllipticExpr::term(RatFunX coefficient, ExprKey key) {
  // Bring r to the canonical range: r^2 = 1 - x, r^-1 = r / (1 - x).
  while (key.r_exp >= 2) {
    coefficient *= RatFunX(one_minus_x());
    key.r_exp -= 2;
  }
  while (key.r_exp < 0) {
    coefficient /= RatFunX(one_minus_x());
    key.r_exp += 2;
  }
  trim_jets(key.jets);
  EllipticExpr e;
  e.add_term(std::move(key), coefficient);
  return e;
}

EllipticExpr EllipticExpr::x() { return EllipticExpr(RatFunX(Poly::x())); }

EllipticExpr EllipticExpr::sigma() {
  return EllipticExpr(RatFunX(Poly({Rational(0), Rational(1), Rational(-1)})));
}

EllipticExpr EllipticExpr::r() { return term(RatFunX(1), ExprKey{1, {}}); }

EllipticExpr EllipticExpr::z(int j, int power) {
  if (j < 0 || power < 0) throw InvalidArgument("z jet index and power must be nonnegative");
  ExprKey key;
  key.jets.assign(static_cast<std::size_t>(j) + 1, 0);
  key.jets.back() = power;
  return term(RatFunX(1), std::move(key));
}

int EllipticExpr::max_jet() const {
  int m = -1;
  for (const auto& [key, c] : terms_) {
    m = std::max(m, static_cast<int>(key.jets.size()) - 1);
  }
  return m;
}

void EllipticExpr::add_term(ExprKey key, const RatFunX& coefficient) {
  if (coefficient.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coefficient);
    return;
  }
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

EllipticExpr& EllipticExpr::operator+=(const EllipticExpr& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

EllipticExpr& EllipticExpr::operator-=(const EllipticExpr& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

EllipticExpr& EllipticExpr::operator*=(const RatFunX& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

EllipticExpr operator*(const EllipticExpr& a, const EllipticExpr& b) {
  EllipticExpr product;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      ExprKey key;
      key.r_exp = ka.r_exp + kb.r_exp;
      key.jets.assign(std::max(ka.jets.size(), kb.jets.size()), 0);
      for (std::size_t j = 0; j < key.jets.size(); ++j) key.jets[j] = ka.jet(j) + kb.jet(j);
      RatFunX c = ca * cb;
      if (key.r_exp == 2) {
        c *= RatFunX(one_minus_x());
        key.r_exp = 0;
      }
      product.add_term(std::move(key), c);
    }
  }
  return product;
}

EllipticExpr EllipticExpr::operator-() const {
  EllipticExpr negated = *this;
  for (auto& [key, c] : negated.terms_) c = -c;
  return negated;
}

EllipticExpr EllipticExpr::pow(int exponent) const {
  if (exponent < 0) throw InvalidArgument("negative power of an elliptic expression");
  EllipticExpr result(1);
  EllipticExpr base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

EllipticExpr EllipticExpr::diff_x() const {
  EllipticExpr d;
  for (const auto& [key, c] : terms_) {
    d.add_term(key, c.derivative());
    if (key.r_exp == 1) {
      d.add_term(key, c * RatFunX(Poly(make_rational(-1, 2)), one_minus_x()));
    }
    for (std::size_t j = 0; j < key.jets.size(); ++j) {
      const int power = key.jets[j];
      if (power == 0) continue;
      ExprKey next = key;
      next.jets[j] -= 1;
      if (next.jets.size() < j + 2) next.jets.resize(j + 2, 0);
      next.jets[j + 1] += 1;
      trim_jets(next.jets);
      d.add_term(std::move(next), c * Rational(power));
    }
  }
  return d;
}

EllipticExpr EllipticExpr::diff_y() const {
  static const EllipticExpr dx_dy = -(sigma() * z(0, 2));
  return dx_dy * diff_x();
}

ClosedFormValue EllipticExpr::eval_at_half() const {
  const Rational half = make_rational(1, 2);
  std::vector<ClosedFormValue> jet_values;
  ClosedFormValue value;
  for (const auto& [key, c] : terms_) {
    if (c.has_pole_at(half)) {
      throw PoleAtHalf("coefficient " + c.to_string() + " is singular at x = 1/2");
    }
    ClosedFormValue t(c(half));
    if (key.r_exp == 1) t = t * ClosedFormValue::monomial(half, 0, 0, true);
    for (std::size_t j = 0; j < key.jets.size(); ++j) {
      if (key.jets[j] == 0) continue;
      while (jet_values.size() <= j) {
        jet_values.push_back(zjet_at_half(static_cast<int>(jet_values.size())));
      }
      t = t * jet_values[j].pow(key.jets[j]);
    }
    value += t;
  }
  return value;
}

EllipticExpr EllipticExpr::reduce_jets() const {
  // z'' = (z/4 - (1 - 2x) z') / (x(1 - x))
  const Poly sigma_poly({Rational(0), Rational(1), Rational(-1)});
  const EllipticExpr z2 =
      RatFunX(Poly(make_rational(1, 4)), sigma_poly) * z(0) -
      RatFunX(Poly({Rational(1), Rational(-2)}), sigma_poly) * z(1);
  EllipticExpr current = *this;
  while (current.max_jet() >= 2) {
    EllipticExpr next;
    for (const auto& [key, c] : current.terms_) {
      const int top = static_cast<int>(key.jets.size()) - 1;
      if (top < 2) {
        next.add_term(key, c);
        continue;
      }
      // Lower the highest jet by one order: z_top = d^(top-2)/dx^(top-2) z''.
      ExprKey rest = key;
      const int power = rest.jets.back();
      rest.jets.back() = 0;
      trim_jets(rest.jets);
      EllipticExpr replacement = z2;
      for (int k = 2; k < top; ++k) replacement = replacement.diff_x();
      next += term(c, rest) * replacement.pow(power);
    }
    current = std::move(next);
  }
  return current;
}

std::string EllipticExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")";
    if (key.r_exp == 1) out << "*r";
    for (std::size_t j = 0; j < key.jets.size(); ++j) {
      if (key.jets[j] == 0) continue;
      out << "*z" << j;
      if (key.jets[j] > 1) out << "^" << key.jets[j];
    }
  }
  return out.str();
}

}  // namespace berndt
