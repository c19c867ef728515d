#pragma once

#include <stdexcept>
#include <string>

namespace sgw {

// Bad input: out-of-range parameters, violated preconditions.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Operands living in polynomial rings with different numbers of variables.
class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A request that is well-formed but outside what the library computes.
class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Division by zero and similar.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The chosen torus weights hit a pole of some fixed-locus contribution.
// Callers draw fresh weights and retry.
class ResampleRequired : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two routes that must agree did not. Always an implementation bug, never a
// mathematical zero.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sgw
