#pragma once

#include <stdexcept>
#include <string>

namespace posdyn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller-side problems: bad indices, malformed input, violated preconditions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class CycleError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotGraded : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotAutonomous : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotSelfDual : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A configured size or iteration cap was hit. The message carries the
// progress made before giving up.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed; this is a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace posdyn
