#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace coxwalls {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad letters, asymmetric matrices, mismatched endpoints.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search hit one of its configured caps. The caller must
/// raise the cap; results are never silently truncated.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The floating-point representation could not decide a root sign.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Two walls whose crossing verdict could not be decided.
class Undetermined : public Error {
 public:
  Undetermined(std::string first, std::string second)
      : Error("undetermined crossing verdict for walls " + first + " and " + second),
        first_(std::move(first)),
        second_(std::move(second)) {}

  const std::string& first() const noexcept { return first_; }
  const std::string& second() const noexcept { return second_; }

 private:
  std::string first_;
  std::string second_;
};

}  // namespace coxwalls
