#pragma once

#include <stdexcept>
#include <string>

namespace biscount {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad file, wrong parameters, non-regular graph).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A set was used against the wrong side of the bipartition.
class PartMismatch : public Error {
 public:
  using Error::Error;
};

/// A configured work budget (net points, family size, samples, ...) was exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The eigensolver failed or produced residuals above tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace biscount
