#pragma once

#include <stdexcept>
#include <string>

namespace tropical {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The inputs are well formed but violate a mathematical precondition
/// (mixed instances, missing inverse, shape mismatch, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DomainMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class NoInverse : public DomainError {
 public:
  NoInverse() : DomainError("the additive neutral has no multiplicative inverse") {}
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotSquare : public DomainError {
 public:
  NotSquare() : DomainError("matrix is not square") {}
};

class NotInvertible : public DomainError {
 public:
  NotInvertible() : DomainError("matrix is not monomial, hence not invertible") {}
};

class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A bounded search or enumeration ran out of budget. Never means "no".
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

class SizeLimit : public BudgetExhausted {
 public:
  using BudgetExhausted::BudgetExhausted;
};

class WitnessSearchExhausted : public BudgetExhausted {
 public:
  using BudgetExhausted::BudgetExhausted;
};

/// Malformed external input (JSON, tables, selectors).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tropical
