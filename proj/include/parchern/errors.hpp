#pragma once

#include <stdexcept>
#include <string>

namespace parchern {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic on elements of two different Chow models, bundles over
/// different divisors, and similar ambient mismatches.
class ModelMismatch : public Error {
public:
  using Error::Error;
};

/// An operation was called outside its precondition (out-of-range degree,
/// unknown component, nonzero constant term for exp, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Structured input (a model, map, family or complex) failed validation.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// Malformed textual input. `where` is a byte offset or a JSON pointer.
class ParseError : public Error {
public:
  ParseError(std::string where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)), message_(what) {}

  const std::string& where() const noexcept { return where_; }
  /// The message without the location.
  const std::string& message() const noexcept { return message_; }

private:
  std::string where_;
  std::string message_;
};

}  // namespace parchern
