#pragma once

#include <stdexcept>
#include <string>

namespace singlink {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input (bad labels, indices, unparseable text).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Operands of a polynomial operation live in different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A closure computation (seed or mutation-class BFS) hit its cap.
class Overflow : public Error {
 public:
  explicit Overflow(std::size_t cap)
      : Error("enumeration overflow: more than " + std::to_string(cap) + " elements"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace singlink
