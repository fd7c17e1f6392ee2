#pragma once

#include <stdexcept>
#include <string>

namespace hdx {

enum class ErrorKind {
  MixedDimension,
  BadWeights,
  BadParams,
  NotAFace,
  NotConnected,
  ConvergenceFailure,
  NotHomomorphism,
  NotSurjective,
  LinkNotIsomorphic,
  Irregular,
  BaseMismatch,
  NotACocycle,
  BudgetExceeded,
  MissingFlagEdge,
  NotPerfectSquare,
  DimensionTooSmall,
  LevelMismatch,
  DomainMismatch,
  PreconditionViolated,
  DecompositionFailure,
  IotaUndefined,
  UnsupportedField,
  ParseError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::MixedDimension: return "MixedDimension";
    case ErrorKind::BadWeights: return "BadWeights";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::LinkNotIsomorphic: return "LinkNotIsomorphic";
    case ErrorKind::Irregular: return "Irregular";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::MissingFlagEdge: return "MissingFlagEdge";
    case ErrorKind::NotPerfectSquare: return "NotPerfectSquare";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::LevelMismatch: return "LevelMismatch";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
    case ErrorKind::IotaUndefined: return "IotaUndefined";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace hdx
