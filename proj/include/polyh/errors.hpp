#pragma once

#include <stdexcept>
#include <string>

namespace polyh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (r >= 1, delta <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Too few usable points for a regression.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// Angular grid too coarse for the requested truncation order.
class AliasError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

class UnknownProfile : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input. `field()` names the first offending field.
class ParseError : public Error {
 public:
  ParseError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace polyh
