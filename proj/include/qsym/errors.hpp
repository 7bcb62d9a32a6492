#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

// Argument outside the mathematical domain of an operation (negative factorial,
// |base| >= 1 for an infinite product, inadmissible key, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A denominator came within the context's singular threshold of zero.
class NonGenericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A truncated series or product hit its term cap before the tail bound was met.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qsym
