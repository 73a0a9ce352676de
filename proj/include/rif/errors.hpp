#pragma once

#include <stdexcept>
#include <string>

namespace rif {

// Base for everything the library throws on bad input. The CLI maps the
// whole ValidationError family to exit code 1 and UnknownPropertyError
// (a bad argument, not bad data) to exit code 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : Error {
  using Error::Error;
};

struct MissingElementError : ValidationError {
  using ValidationError::ValidationError;
};

struct UniverseMismatchError : ValidationError {
  using ValidationError::ValidationError;
};

struct CutParamsError : ValidationError {
  using ValidationError::ValidationError;
};

struct UnknownSetError : ValidationError {
  using ValidationError::ValidationError;
};

struct KindMismatchError : ValidationError {
  using ValidationError::ValidationError;
};

struct UnknownAttributeError : ValidationError {
  using ValidationError::ValidationError;
};

struct DuplicateObjectIdError : ValidationError {
  using ValidationError::ValidationError;
};

struct SpaceTooLargeError : ValidationError {
  using ValidationError::ValidationError;
};

struct UnknownPropertyError : Error {
  using Error::Error;
};

}  // namespace rif
