#pragma once

#include <stdexcept>
#include <string>

namespace flagdom {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidTypeError : public Error {
 public:
  using Error::Error;
};

class CapExceededError : public Error {
 public:
  using Error::Error;
};

class RankMismatchError : public Error {
 public:
  using Error::Error;
};

class NotDominantError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class ExceptionalOrbitError : public Error {
 public:
  using Error::Error;
};

// Internal inconsistency between independently computed quantities; signals
// a bug in the shipped data or the code, never bad user input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (weights, rationals, certificate files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace flagdom
