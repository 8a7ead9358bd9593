#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace jdiv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates a type invariant (probabilities, density matrices,
/// distance matrices, family homogeneity).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Two inputs that must agree in length or dimension do not.
class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A scalar parameter lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An identity check was requested on terms that are not finite.
class InfiniteTermError : public Error {
 public:
  using Error::Error;
};

/// Two algebraically equivalent formulas disagreed beyond tolerance.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// The requested computation is exponential and the input is too large.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input (JSON or CSV).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised by embed() when the squared-distance matrix is not of negative
/// type. Carries the sum-zero coefficients c with c^T D c > 0.
class NotNegativeTypeError : public Error {
 public:
  NotNegativeTypeError(const std::string& what, std::vector<double> witness,
                       double min_eigenvalue)
      : Error(what), witness_(std::move(witness)), min_eigenvalue_(min_eigenvalue) {}

  const std::vector<double>& witness() const noexcept { return witness_; }
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  std::vector<double> witness_;
  double min_eigenvalue_;
};

}  // namespace jdiv
