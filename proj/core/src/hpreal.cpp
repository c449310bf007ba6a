#include "berndt/hpreal.hpp"

#include <algorithm>
#include <climits>
#include <memory>
#include <vector>

#include "berndt/errors.hpp"

namespace berndt {

namespace {

mpfr_prec_t checked(long prec) {
  if (prec < MPFR_PREC_MIN || prec > MPFR_PREC_MAX) {
    throw InvalidArgument("precision out of range: " + std::to_string(prec));
  }
  return static_cast<mpfr_prec_t>(prec);
}

}  // namespace

HPReal::HPReal(long prec) {
  mpfr_init2(value_, checked(prec));
  mpfr_set_zero(value_, 1);
}

HPReal::HPReal(long value, long prec) {
  mpfr_init2(value_, checked(prec));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

HPReal::HPReal(double value, long prec) {
  mpfr_init2(value_, checked(prec));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

HPReal::HPReal(const Rational& value, long prec) {
  mpfr_init2(value_, checked(prec));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

HPReal HPReal::from_string(const std::string& decimal, long prec) {
  HPReal r(prec);
  if (mpfr_set_str(r.value_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    throw InvalidArgument("malformed decimal: '" + decimal + "'");
  }
  return r;
}

HPReal HPReal::pow2(long exponent, long prec) {
  HPReal r(1L, prec);
  mpfr_mul_2si(r.value_, r.value_, exponent, MPFR_RNDN);
  return r;
}

HPReal::HPReal(const HPReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

HPReal::HPReal(HPReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

HPReal& HPReal::operator=(const HPReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

HPReal& HPReal::operator=(HPReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

HPReal::~HPReal() { mpfr_clear(value_); }

HPReal HPReal::with_prec(long prec) const {
  HPReal r(prec);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

namespace {

// Result of a binary operation is held at the larger operand precision.
void widen(mpfr_t target, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(target)) {
    mpfr_prec_round(target, mpfr_get_prec(other), MPFR_RNDN);
  }
}

}  // namespace

HPReal& HPReal::operator+=(const HPReal& other) {
  widen(value_, other.value_);
  mpfr_add(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}

HPReal& HPReal::operator-=(const HPReal& other) {
  widen(value_, other.value_);
  mpfr_sub(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}

HPReal& HPReal::operator*=(const HPReal& other) {
  widen(value_, other.value_);
  mpfr_mul(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}

HPReal& HPReal::operator/=(const HPReal& other) {
  widen(value_, other.value_);
  mpfr_div(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}

HPReal& HPReal::operator*=(long factor) {
  mpfr_mul_si(value_, value_, factor, MPFR_RNDN);
  return *this;
}

HPReal& HPReal::operator/=(long divisor) {
  mpfr_div_si(value_, value_, divisor, MPFR_RNDN);
  return *this;
}

HPReal HPReal::operator-() const {
  HPReal r = *this;
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const HPReal& a, const HPReal& b) {
  if (mpfr_nan_p(a.value_) || mpfr_nan_p(b.value_)) return std::partial_ordering::unordered;
  const long prec = std::min(a.prec(), b.prec());
  HPReal ra = a.with_prec(prec);
  HPReal rb = b.with_prec(prec);
  const int c = mpfr_cmp(ra.value_, rb.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

long HPReal::exponent2() const {
  if (mpfr_zero_p(value_)) return LONG_MIN / 4;
  if (!mpfr_number_p(value_)) return LONG_MAX / 4;
  return static_cast<long>(mpfr_get_exp(value_));
}

std::string HPReal::to_decimal(int digits) const {
  std::vector<char> buffer(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Re", digits - 1, value_);
  return buffer.data();
}

std::string HPReal::to_fixed(int decimals) const {
  const long magnitude = std::max(0L, exponent2());
  std::vector<char> buffer(static_cast<std::size_t>(decimals + magnitude / 3) + 64);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Rf", decimals, value_);
  return buffer.data();
}

namespace {

template <int (*F)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
HPReal apply(const HPReal& x) {
  HPReal r(x.prec());
  F(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

HPReal abs(const HPReal& x) { return apply<mpfr_abs>(x); }
HPReal sqrt(const HPReal& x) { return apply<mpfr_sqrt>(x); }
HPReal exp(const HPReal& x) { return apply<mpfr_exp>(x); }
HPReal log(const HPReal& x) { return apply<mpfr_log>(x); }
HPReal sin(const HPReal& x) { return apply<mpfr_sin>(x); }
HPReal cos(const HPReal& x) { return apply<mpfr_cos>(x); }
HPReal sinh(const HPReal& x) { return apply<mpfr_sinh>(x); }
HPReal cosh(const HPReal& x) { return apply<mpfr_cosh>(x); }
HPReal tanh(const HPReal& x) { return apply<mpfr_tanh>(x); }

HPReal pow(const HPReal& base, long exponent) {
  HPReal r(base.prec());
  mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
  return r;
}

HPReal max(const HPReal& a, const HPReal& b) { return a < b ? b : a; }

}  // namespace berndt
