#pragma once

#include <stdexcept>
#include <string>

namespace krammer {

// Base of every error raised by the library. The CLI maps all of these to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NegativePowerOfNonUnit : public Error {
 public:
  NegativePowerOfNonUnit() : Error("negative power of a non-unit Laurent polynomial") {}
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("exact division failed: divisor does not divide dividend") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  NotSquare() : Error("matrix is not square") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class PartTooSmall : public Error {
 public:
  PartTooSmall() : Error("a colliding part must contain at least two strands") {}
};

class InvalidCurve : public Error {
 public:
  using Error::Error;
};

// Raised when a pairwise difference y_i - y_j has roots that are not rational.
// Component indices are 1-based.
class IrrationalCollisionUnresolved : public Error {
 public:
  IrrationalCollisionUnresolved(int first, int second)
      : Error("components " + std::to_string(first) + " and " + std::to_string(second) +
              " collide at non-rational x values"),
        first_(first),
        second_(second) {}

  int first() const { return first_; }
  int second() const { return second_; }

 private:
  int first_;
  int second_;
};

}  // namespace krammer
