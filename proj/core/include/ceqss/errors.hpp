#pragma once

#include <stdexcept>
#include <string>

namespace ceqss {

// Every error carries a short machine-readable code ("field", "M1",
// "Eq15d", ...) next to the human-readable message.  The CLI maps the
// error category to its exit code.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Invalid input: bad field, mismatched dimensions, violated construction
// condition.  CLI exit code 2.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An enumeration or state-vector guard was exceeded.  CLI exit code 4.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Share data inconsistent with any valid encoding.  CLI exit code 3.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// A postcondition the construction theorems guarantee failed to hold.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ceqss
