#pragma once

#include <stdexcept>
#include <string>

namespace clasperkit {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CLASPERKIT_ERROR_TYPE(NAME)                               \
  struct NAME : Error {                                           \
    explicit NAME(const std::string& what) : Error(what) {}       \
  }

CLASPERKIT_ERROR_TYPE(NotSymmetricError);
CLASPERKIT_ERROR_TYPE(SingularError);
CLASPERKIT_ERROR_TYPE(DimensionError);
CLASPERKIT_ERROR_TYPE(SizeCapError);
CLASPERKIT_ERROR_TYPE(DisconnectedSurfaceError);
CLASPERKIT_ERROR_TYPE(NeedsDiagramError);
CLASPERKIT_ERROR_TYPE(NotAKernelElementError);
CLASPERKIT_ERROR_TYPE(ArfUndefinedError);
CLASPERKIT_ERROR_TYPE(InvalidSpecError);
CLASPERKIT_ERROR_TYPE(CorrespondenceViolationError);
CLASPERKIT_ERROR_TYPE(DegeneratePairingError);
CLASPERKIT_ERROR_TYPE(ParseError);
CLASPERKIT_ERROR_TYPE(ValidationError);

#undef CLASPERKIT_ERROR_TYPE

}  // namespace clasperkit
