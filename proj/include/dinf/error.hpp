#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dinf {

enum class ErrorKind {
  CharacteristicTwo,
  BadSpec,
  DivisionByZero,
  LevelOverflow,
  BadLevel,
  NotSplitOverField,
  NotAUnit,
  NotInvertible,
  InverseOutsideR,
  NotIdempotent,
  NotInvolution,
  NonUnitPower,
  ParseError,
  InternalInconsistency,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorKind::BadSpec: return "BadSpec";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::LevelOverflow: return "LevelOverflow";
    case ErrorKind::BadLevel: return "BadLevel";
    case ErrorKind::NotSplitOverField: return "NotSplitOverField";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::InverseOutsideR: return "InverseOutsideR";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::NonUnitPower: return "NonUnitPower";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& detail = {}) { throw Error(kind, detail); }

}  // namespace dinf
