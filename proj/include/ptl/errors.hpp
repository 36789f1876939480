#pragma once

#include <stdexcept>
#include <string>

namespace ptl {

// Engine error taxonomy. The CLI maps every one of these to exit code 2.
enum class ErrorKind {
  FieldMismatch,
  ShapeError,
  SpaceMismatch,
  ArityCapExceeded,
  CharacteristicTooSmall,
  DivisionByZero,
  NotADeformationMap,
  NotMaurerCartan,
  NotSymmetric,
  InvalidOmega,
  InvalidExampleInput,
  BudgetExceeded,
  ParseError,
  UnknownCommand,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::ArityCapExceeded: return "ArityCapExceeded";
    case ErrorKind::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotADeformationMap: return "NotADeformationMap";
    case ErrorKind::NotMaurerCartan: return "NotMaurerCartan";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::InvalidOmega: return "InvalidOmega";
    case ErrorKind::InvalidExampleInput: return "InvalidExampleInput";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool cond, ErrorKind kind, const std::string& message) {
  if (!cond) fail(kind, message);
}

}  // namespace ptl
