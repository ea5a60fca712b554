#pragma once

#include <stdexcept>
#include <string>

namespace nilflow {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mixed partials of the input disagree; the data is not a gradient.
struct CompatibilityError : Error {
  using Error::Error;
};

/// A 2-form fails the cocycle condition; the extension would break Jacobi.
struct NotClosedError : Error {
  using Error::Error;
};

/// Structure constants violate the Jacobi identity.
struct JacobiError : Error {
  using Error::Error;
};

struct NotNilpotentError : Error {
  using Error::Error;
};

struct ClassTooHighError : Error {
  using Error::Error;
};

/// Trajectory left the representable floating-point range.
struct NonFiniteError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace nilflow
