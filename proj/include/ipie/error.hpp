#pragma once

#include <stdexcept>
#include <string>

namespace ipie {

enum class ErrorKind {
  InvalidArgument,
  MalformedInput,
  NonIntegerPayoff,
  VariableMismatch,
  NotARoot,
  NoUnivariate,
  NotSquareFree,
  EndpointIsRoot,
  Reducible,
  DegreeTooHigh,
  SingularJacobian,
  SingularOnBox,
  NonSquareSystem,
  DidNotConverge,
  AllStartsFailed,
  DependentRows,
  ReconstructionFailed,
  NotIPIE,
  TooLarge,
  Degenerate,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NonIntegerPayoff: return "NonIntegerPayoff";
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::NoUnivariate: return "NoUnivariate";
    case ErrorKind::NotSquareFree: return "NotSquareFree";
    case ErrorKind::EndpointIsRoot: return "EndpointIsRoot";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::SingularJacobian: return "SingularJacobian";
    case ErrorKind::SingularOnBox: return "SingularOnBox";
    case ErrorKind::NonSquareSystem: return "NonSquareSystem";
    case ErrorKind::DidNotConverge: return "DidNotConverge";
    case ErrorKind::AllStartsFailed: return "AllStartsFailed";
    case ErrorKind::DependentRows: return "DependentRows";
    case ErrorKind::ReconstructionFailed: return "ReconstructionFailed";
    case ErrorKind::NotIPIE: return "NotIPIE";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace ipie
