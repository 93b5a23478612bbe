#pragma once

#include <stdexcept>
#include <string>

namespace degloci {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A variable was used that the ring does not declare.
class UndeclaredVariable : public Error {
 public:
  explicit UndeclaredVariable(const std::string& name)
      : Error("undeclared variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Negative power of the deformation parameter where none is allowed.
class PoleError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Every maximal minor of a matrix vanishes identically.
class DegenerateMatrix : public Error {
 public:
  using Error::Error;
};

class UnsupportedShape : public Error {
 public:
  using Error::Error;
};

class FormError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class UnknownInstance : public Error {
 public:
  using Error::Error;
};

/// An operation refused because one of its preconditions did not hold.
/// The message names the failed check.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace degloci
