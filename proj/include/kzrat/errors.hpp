#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kzrat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Precondition failures on otherwise well-typed input: index out of range,
/// coincident points, evaluation at a pole, unsupported convention, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested leading exponent does not admit a nonzero leading coefficient.
class NotAnEigenvalue : public Error {
 public:
  using Error::Error;
};

/// The residue at the center has no integer eigenvalue, so there is no
/// Laurent solution with an integer leading exponent.
class NoIntegerExponent : public Error {
 public:
  using Error::Error;
};

/// A resonant step of the recursion has no solution. The certificate is a row
/// vector y with y*M = 0 and y*rhs != 0, rendered entry by entry.
class ResonanceObstruction : public Error {
 public:
  ResonanceObstruction(long level, std::vector<std::string> certificate);

  long level() const { return level_; }
  const std::vector<std::string>& certificate() const { return certificate_; }

 private:
  long level_;
  std::vector<std::string> certificate_;
};

class NoPolynomialDenominator : public Error {
 public:
  using Error::Error;
};

class InsufficientSeries : public Error {
 public:
  InsufficientSeries(std::size_t required, std::size_t available);

  std::size_t required() const { return required_; }
  std::size_t available() const { return available_; }

 private:
  std::size_t required_;
  std::size_t available_;
};

/// Configuration rejected; names the offending field.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message);

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace kzrat
