#include "berndt/rational.hpp"

#include <cstdlib>

#include "berndt/errors.hpp"

namespace berndt {

Rational make_rational(long numerator, long denominator) {
  return make_rational(Integer(numerator), Integer(denominator));
}

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw InvalidArgument("rational with zero denominator");
  }
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) {
    return value.get_num().get_str();
  }
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) {
    throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
  }
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') {
      throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  Integer den = parse_integer(text.substr(slash + 1));
  if (den <= 0) {
    throw InvalidArgument("rational denominator must be positive: '" +
                          std::string(text) + "'");
  }
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw InvalidArgument("zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);  // already reduced
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

}  // namespace berndt
