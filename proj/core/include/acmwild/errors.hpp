#pragma once

#include <stdexcept>
#include <string>

namespace acmwild {

// Base of every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its documented domain (n < 2, s < 3, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

// Random sampling requested over a field where it is not supported.
class UnsupportedSampling : public Error {
 public:
  using Error::Error;
};

// Every resample of a presentation failed its genericity certificates.
class GenericityFailure : public Error {
 public:
  using Error::Error;
};

// An exact graded-piece computation was requested on a variety known only
// through its resolution degree data.
class ExactModeUnavailable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace acmwild
