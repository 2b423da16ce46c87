#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metalie {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched characteristic, variable count, width or context.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (text, files, parameters).
class InputError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        detail_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

/// An enumeration or branch count exceeded its configured cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class TorsionInput : public Error {
 public:
  using Error::Error;
};

class DimensionExceeded : public Error {
 public:
  using Error::Error;
};

class NonDivisor : public Error {
 public:
  using Error::Error;
};

}  // namespace metalie
