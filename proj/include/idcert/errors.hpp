#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idcert {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed arguments outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded its configured budget (e.g. Groebner pair count).
class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input; carries the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace idcert
