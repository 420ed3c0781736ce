#pragma once

#include <stdexcept>
#include <string>

namespace flatfold {

// Root of every error thrown by the library. Negative mathematical verdicts
// (a vertex that fails Kawasaki, an invalid assignment) are returned as values,
// never thrown; exceptions signal broken preconditions or malformed input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed crease graph: dangling endpoint, self-loop, zero-length crease.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Creases or boundary edges meeting away from a shared vertex.
class PlanarityError : public StructuralError {
 public:
  using StructuralError::StructuralError;
};

// Operation asked for something the theory does not cover (boundary vertices).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Odd-length sequence handed to an operation that needs 2n angles.
class ParityError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotFlatFoldableError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Angles extracted from coordinates that are not exact rational degrees.
class ExactnessError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Folded directions do not return to the start (alternating sum non-zero).
class ClosureError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Exhaustive search asked to run above its configured size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace flatfold
