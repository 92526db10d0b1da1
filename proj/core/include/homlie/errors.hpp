#pragma once

#include <stdexcept>
#include <string>

namespace homlie {

/// Operands live over different fields.
struct FieldMismatchError : std::invalid_argument {
  explicit FieldMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// Shape of an argument does not match (row/column/ambient dimension).
struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Operation requires a prime field (or rejects one).
struct UnsupportedFieldError : std::invalid_argument {
  explicit UnsupportedFieldError(const std::string& what) : std::invalid_argument(what) {}
};

/// Exhaustive enumeration would exceed the configured budget.
struct BudgetExceededError : std::runtime_error {
  explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : std::invalid_argument {
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed textual input (scalar strings, JSON documents).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace homlie
