#pragma once

#include <stdexcept>
#include <string>

namespace coarselen {

enum class ErrorKind {
  ModeMismatch,
  DivisionByZero,
  ParameterOutOfRange,
  InvalidSigmaWord,
  NotInSigmaImage,
  PatternCapExceeded,
  Parse,
  Io,
  ToleranceFailure,
};

const char* to_string(ErrorKind kind);

/// Exception type for all precondition and domain failures raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace coarselen
