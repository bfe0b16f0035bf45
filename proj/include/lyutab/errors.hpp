#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lyutab {

/// Anything caused by bad user input. The CLI maps these to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Violated internal contracts. A throw from here is a bug in this library
/// (e.g. a sign convention broke d∘d = 0), never a user mistake. The CLI
/// maps these to exit code 1.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct SyntaxError : InputError {
  std::size_t position;
  SyntaxError(const std::string& msg, std::size_t pos)
      : InputError(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct UnknownVariableError : InputError {
  using InputError::InputError;
};

struct UnitIdealError : InputError {
  using InputError::InputError;
};

struct NonPositiveExponentError : InputError {
  using InputError::InputError;
};

struct NotSquarefreeError : InputError {
  using InputError::InputError;
};

struct NotAFaceError : InputError {
  using InputError::InputError;
};

struct VoidComplexError : InputError {
  using InputError::InputError;
};

struct IndexOutOfRangeError : InternalError {
  using InternalError::InternalError;
};

struct ShapeMismatchError : InternalError {
  using InternalError::InternalError;
};

struct NotAComplexError : InternalError {
  using InternalError::InternalError;
};

struct NotAChainMapError : InternalError {
  using InternalError::InternalError;
};

struct InternalInconsistencyError : InternalError {
  using InternalError::InternalError;
};

}  // namespace lyutab
