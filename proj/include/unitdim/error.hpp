#pragma once

#include <stdexcept>
#include <string>

namespace unitdim {

// Base of every error thrown by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A family literal or numeric argument outside its validity range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A minor operation or graph edit whose target does not exist.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A size cap was exceeded (canonical labeling, minor closure, ...).
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A real argument outside the domain of a closed-form map.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Geometric input the construction is not defined for (e.g. concentric spheres).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// A construction precondition that callers are expected to establish.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed graph text or literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

// The engine could not certify an exact value where one is required.
class InconclusiveRootError : public Error {
 public:
  using Error::Error;
};

// Requested query has no registry entry.
class NotSupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace unitdim
