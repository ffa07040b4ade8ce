#pragma once

#include <stdexcept>
#include <string>

namespace tropcvx {

/// Base of all library errors. The CLI maps every Error to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (size mismatch, empty sequence, bad
/// rational text, wrong schema).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured budget (pieces, ground set size, enumeration size) was hit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace tropcvx
