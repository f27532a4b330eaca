#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace exotic {

enum class ErrorKind {
  InvalidInput,
  NotHomotopySphere,
  NotPrincipal,
  DegenerateInput,
  InvalidSize,
  OutOfFamily,
  IndexOutOfRange,
  ConfigMismatch,
  Unreachable,
  InvalidRep,
  InvalidDimension,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidInput: return "InvalidInput";
  case ErrorKind::NotHomotopySphere: return "NotHomotopySphere";
  case ErrorKind::NotPrincipal: return "NotPrincipal";
  case ErrorKind::DegenerateInput: return "DegenerateInput";
  case ErrorKind::InvalidSize: return "InvalidSize";
  case ErrorKind::OutOfFamily: return "OutOfFamily";
  case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorKind::ConfigMismatch: return "ConfigMismatch";
  case ErrorKind::Unreachable: return "Unreachable";
  case ErrorKind::InvalidRep: return "InvalidRep";
  case ErrorKind::InvalidDimension: return "InvalidDimension";
  }
  return "Unknown";
}

/// Raised when an operation's precondition on its mathematical input fails.
/// The CLI maps these to exit status 1.
class DomainError : public std::runtime_error {
public:
  DomainError(ErrorKind kind, const std::string &what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace exotic
