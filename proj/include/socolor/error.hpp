#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace soc {

// Base of every error the library reports. Callers that only care about
// "something was wrong with the input" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class InvalidColoring : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

class InvalidRotation : public Error {
 public:
  using Error::Error;
};

// Raised by the brute-force oracle when the input exceeds its size guard.
class InputTooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace soc
