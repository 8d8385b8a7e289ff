#pragma once

#include <stdexcept>
#include <string>

namespace frobkit {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Raised by routines that need an odd characteristic.
class OddPrimeRequired : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands live in different rings") {}
};

class ExponentOverflow : public Error {
 public:
  ExponentOverflow() : Error("exponent outside the signed 64-bit range") {}
};

// An iteration or size budget ran out before the computation finished.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A self-check failed; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace frobkit
