#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace horex {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two truncated scalars/series with different truncation orders were combined.
class TruncationMismatch : public Error {
 public:
  using Error::Error;
};

// q was specialized to zero, or a division by zero was requested.
class NonInvertible : public Error {
 public:
  using Error::Error;
};

// substitute_k called on a scalar that already carries t.
class DoubleSubstitution : public Error {
 public:
  using Error::Error;
};

// A k-bearing value reached the deformation layer, which only accepts k-free input.
class UnsubstitutedParameter : public Error {
 public:
  using Error::Error;
};

// An endomorphism was used where a derivation is expected, or vice versa.
class WrongMapKind : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("at position " + std::to_string(position) + ": " + message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace horex
