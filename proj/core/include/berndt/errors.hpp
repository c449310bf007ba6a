#pragma once

#include <stdexcept>
#include <string>

namespace berndt {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A rational-function coefficient has a vanishing denominator at x = 1/2.
class PoleAtHalf : public Error {
 public:
  using Error::Error;
};

// No closed formula exists for the requested series family and exponent.
class UnsupportedFamilyExponent : public Error {
 public:
  using Error::Error;
};

// The requested integral or relation instance lies outside the supported set.
class UnsupportedExponent : public Error {
 public:
  using Error::Error;
};

// Quadrature could not reach the requested accuracy within its level budget.
class PrecisionUnreachable : public Error {
 public:
  using Error::Error;
};

// A closed form carries a monomial outside its permitted support.
class UnexpectedMonomial : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace berndt
