#pragma once

#include <stdexcept>
#include <string>

namespace ramsey3 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad files, violated preconditions).
class InvalidInput : public Error {
  public:
    using Error::Error;
};

class DuplicateVertex : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class OrderTooSmall : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class SameVertex : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class ParseError : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class InvalidColoring : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

/// A computed object contradicts a proven or cited fact. Never expected on
/// lawful inputs; surfacing it means either a bug or a counterexample.
class Falsification : public Error {
  public:
    using Error::Error;
};

}  // namespace ramsey3
