#pragma once

#include <stdexcept>
#include <string>

namespace qgl {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDivision : public Error {
 public:
  ZeroDivision() : Error("division by a zero quaternion") {}
};

// Raised by imaginary_unit_of for a real quaternion, which lies in every slice.
class RealInput : public Error {
 public:
  RealInput() : Error("quaternion is real; it belongs to every slice") {}
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("zero polynomial: every point of the slice is a root") {}
};

class NonConvergence : public Error {
 public:
  explicit NonConvergence(const std::string& what) : Error(what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at byte " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class EmptyCoeffs : public Error {
 public:
  EmptyCoeffs() : Error("polynomial has no coefficients") {}
};

class UnknownCase : public Error {
 public:
  explicit UnknownCase(const std::string& id) : Error("unknown demo case: " + id) {}
};

}  // namespace qgl
