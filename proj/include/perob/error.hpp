#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace perob {

// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a precondition (invalid data set, bad arguments, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Malformed textual notation. `position` is the 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Two cone points (or a cone point with itself) cannot be glued.
class GluingError : public Error {
 public:
  using Error::Error;
};

// The integral resolution is only built for boundary slopes -1/p.
class UnsupportedResolution : public Error {
 public:
  using Error::Error;
};

// Census persistence failures; `line` is 1-based, 0 when not line-specific.
class CensusIoError : public Error {
 public:
  CensusIoError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace perob
