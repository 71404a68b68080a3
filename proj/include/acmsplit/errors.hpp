#pragma once

#include <stdexcept>
#include <string>

namespace acmsplit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed affine expression or JSON document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A parametric resolution was evaluated without a value for its parameter.
class UnresolvedParameter : public Error {
 public:
  using Error::Error;
};

/// A resolution failed one of its structural invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A numerically impossible situation: parity failure, non-integral or
/// non-positive c2, negative h^0, non-constant parameter scan.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

}  // namespace acmsplit
