#pragma once

#include <stdexcept>
#include <string>

namespace cubeprop {

// Base for every error raised by the library. Callers that only care about
// "the check could not run" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cube morphisms that do not compose, or malformed coordinate data.
class CompositionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A presheaf failed functoriality, or a map failed naturality.
class FunctorialityError : public Error {
 public:
  using Error::Error;
};

class NaturalityError : public Error {
 public:
  using Error::Error;
};

class TruncationTooSmall : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Two computations that must agree did not. Raising this means the
// implementation is wrong, not the input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class NotStableError : public Error {
 public:
  using Error::Error;
};

class ClassificationError : public Error {
 public:
  using Error::Error;
};

// The caller promised that a point is not definitely outside a cocut and the
// locator disagreed.
class PromiseViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cubeprop
