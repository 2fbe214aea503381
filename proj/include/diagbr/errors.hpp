#pragma once

#include <stdexcept>
#include <string>

namespace diagbr {

// Malformed input: bad degree, non-permutation, inconsistent action.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A group order, rank or memory bound was exceeded before any work started.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact division requested where the divisor does not divide.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Checked 64-bit arithmetic left its range; callers may retry with mpz.
class Overflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// An internal consistency check failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace diagbr
