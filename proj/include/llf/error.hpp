#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace llf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A parameter violates a type invariant (m out of range, zero length, ...).
struct InvalidParameter : Error {
  using Error::Error;
};

struct FieldMismatch : Error {
  using Error::Error;
};

/// Raised when an opaque supercuspidal reaches the Weil-Deligne tensor calculus.
struct UnsupportedForTensor : Error {
  using Error::Error;
};

/// Numeric evaluation requested within the guard distance of a pole.
struct NearPole : Error {
  using Error::Error;
};

/// Numeric evaluation outside the region where the integral converges.
struct OutOfDomain : Error {
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("at position " + std::to_string(position) + ": " + what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace llf
