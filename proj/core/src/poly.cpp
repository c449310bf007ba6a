#include "berndt/poly.hpp"

#include <algorithm>
#include <sstream>

#include "berndt/errors.hpp"

namespace berndt {

Poly::Poly(std::initializer_list<Rational> coefficients)
    : coefficients_(coefficients) {
  trim();
}

Poly::Poly(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

Poly::Poly(const Rational& constant) {
  if (constant != 0) coefficients_.push_back(constant);
}

Poly::Poly(long constant) : Poly(Rational(constant)) {}

Poly Poly::x() { return Poly({Rational(0), Rational(1)}); }

Poly Poly::monomial(const Rational& c, int n) {
  if (c == 0) return Poly();
  std::vector<Rational> coefficients(static_cast<std::size_t>(n) + 1);
  coefficients.back() = c;
  return Poly(std::move(coefficients));
}

void Poly::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

Rational Poly::coefficient(int n) const {
  if (n < 0 || n >= static_cast<int>(coefficients_.size())) return 0;
  return coefficients_[static_cast<std::size_t>(n)];
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    coefficients_[i] += other.coefficients_[i];
  }
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    coefficients_[i] -= other.coefficients_[i];
  }
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> product(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      product[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Poly(std::move(product));
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coefficients_.clear();
    return *this;
  }
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

Poly Poly::operator-() const {
  Poly negated = *this;
  for (auto& c : negated.coefficients_) c = -c;
  return negated;
}

Poly Poly::derivative() const {
  if (coefficients_.size() <= 1) return Poly();
  std::vector<Rational> d(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    d[i - 1] = coefficients_[i] * static_cast<long>(i);
  }
  return Poly(std::move(d));
}

Rational Poly::operator()(const Rational& at) const {
  Rational value = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    value = value * at + *it;
  }
  return value;
}

Poly Poly::compose_affine(const Rational& a, const Rational& b) const {
  Poly inner({a, b});
  Poly result;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    result = result * inner + Poly(*it);
  }
  return result;
}

Poly Poly::pow(int exponent) const {
  if (exponent < 0) throw InvalidArgument("negative polynomial power");
  Poly result(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  return *this * (Rational(1) / leading());
}

bool Poly::has_integer_coefficients() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

std::pair<Poly, Poly> Poly::divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<Rational> remainder = dividend.coefficients_;
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {Poly(), dividend};
  std::vector<Rational> quotient(static_cast<std::size_t>(dividend.degree() - dd) + 1);
  const Rational inv_lead = Rational(1) / divisor.leading();
  for (int k = dividend.degree() - dd; k >= 0; --k) {
    Rational q = remainder[static_cast<std::size_t>(k + dd)] * inv_lead;
    quotient[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      remainder[static_cast<std::size_t>(k + j)] -=
          q * divisor.coefficients_[static_cast<std::size_t>(j)];
    }
  }
  return {Poly(std::move(quotient)), Poly(std::move(remainder))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string Poly::to_string(const char* variable) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const Rational& c = coefficients_[i];
    if (c == 0) continue;
    Rational magnitude = abs(c);
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    bool unit = magnitude == 1 && i > 0;
    if (!unit) out << berndt::to_string(magnitude);
    if (i > 0) {
      if (!unit) out << "*";
      out << variable;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace berndt
