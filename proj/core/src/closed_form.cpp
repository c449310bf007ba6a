#include "berndt/closed_form.hpp"

#include <sstream>

#include "berndt/errors.hpp"

namespace berndt {

std::string to_string(const MonomialKey& key) {
  std::ostringstream out;
  out << "G^" << key.gamma_exp << "*pi^(" << key.pi_half_exp << "/2)";
  if (key.sqrt2) out << "*sqrt2";
  return out.str();
}

ClosedFormValue::ClosedFormValue(const Rational& constant) {
  if (constant != 0) terms_.emplace(MonomialKey{}, constant);
}

ClosedFormValue ClosedFormValue::monomial(const Rational& coefficient, MonomialKey key) {
  ClosedFormValue v;
  v.add_term(key, coefficient);
  return v;
}

Rational ClosedFormValue::coefficient(const MonomialKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ClosedFormValue::add_term(MonomialKey key, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

ClosedFormValue& ClosedFormValue::operator+=(const ClosedFormValue& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

ClosedFormValue& ClosedFormValue::operator-=(const ClosedFormValue& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

ClosedFormValue& ClosedFormValue::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

ClosedFormValue operator*(const ClosedFormValue& a, const ClosedFormValue& b) {
  ClosedFormValue product;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      MonomialKey key{ka.gamma_exp + kb.gamma_exp, ka.pi_half_exp + kb.pi_half_exp,
                      ka.sqrt2 != kb.sqrt2};
      Rational c = ca * cb;
      if (ka.sqrt2 && kb.sqrt2) c *= 2;
      product.add_term(key, c);
    }
  }
  return product;
}

ClosedFormValue ClosedFormValue::operator-() const {
  ClosedFormValue negated = *this;
  for (auto& [key, c] : negated.terms_) c = -c;
  return negated;
}

ClosedFormValue ClosedFormValue::pow(int exponent) const {
  if (exponent < 0) {
    if (terms_.size() != 1) {
      throw InvalidArgument("negative power of a non-monomial closed form");
    }
    const auto& [key, c] = *terms_.begin();
    // (c sqrt2)^-1 = sqrt2 / (2c)
    Rational inv = Rational(1) / c;
    if (key.sqrt2) inv /= 2;
    MonomialKey inv_key{-key.gamma_exp, -key.pi_half_exp, key.sqrt2};
    return monomial(inv, inv_key).pow(-exponent);
  }
  ClosedFormValue result(1);
  ClosedFormValue base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string ClosedFormValue::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    out << berndt::to_string(Rational(abs(c)));
    if (key.gamma_exp != 0) out << "*G^" << key.gamma_exp;
    if (key.pi_half_exp != 0) {
      if (key.pi_half_exp % 2 == 0) out << "*pi^" << key.pi_half_exp / 2;
      else out << "*pi^(" << key.pi_half_exp << "/2)";
    }
    if (key.sqrt2) out << "*sqrt2";
  }
  return out.str();
}

}  // namespace berndt
