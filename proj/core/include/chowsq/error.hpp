#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chowsq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: arity mismatch, out-of-range index, unknown identifier.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a cycle expression. `column` is 1-based.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t column)
      : UsageError(what + " at column " + std::to_string(column)),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Series with zero constant term passed to an inversion.
class NonInvertibleError : public Error {
 public:
  using Error::Error;
};

/// A variety model whose data breaks the grading or normalization rules.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// 2 * tau_{k-1} of a filtration-k class came out non-integral.
class IntegralityViolation : public Error {
 public:
  using Error::Error;
};

/// Residual cycle handed to the primordial analysis violates its constraints.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed.
class InvariantFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace chowsq
