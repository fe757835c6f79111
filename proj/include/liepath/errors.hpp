#pragma once

#include <stdexcept>
#include <string>

namespace liepath {

/// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid input: unknown algebra, weight outside the system, bad index, ...
struct DomainError : Error {
  using Error::Error;
};

/// A configured limit (such as the weight-system level cap) was exceeded.
struct ResourceError : Error {
  using Error::Error;
};

/// An internal self-check failed. Indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

/// Floating-point evaluation left the representable range.
struct OverflowError : Error {
  using Error::Error;
};

}  // namespace liepath
