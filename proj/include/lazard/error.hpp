#pragma once

#include <stdexcept>
#include <string>

namespace lazard {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is outside the range where the Lazard machinery applies
// (class >= p, p = 2, or a denominator divisible by p).
class NotLazardError : public Error {
 public:
  using Error::Error;
};

// Desk-scale size cap exceeded without a force flag.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A structural identity that must hold by theory did not.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace lazard
