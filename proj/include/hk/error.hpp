#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hk {

enum class ErrorCode {
  InvalidPermutation,
  OrderCapExceeded,
  NotNormal,
  NotSubgroup,
  GroupMismatch,
  DivisionByZero,
  NotSolvable,
  NotLinear,
  IndexNotPrime,
  NotRational,
  SchemaError,
  VerificationFailed,
  InternalVerificationFailed,
  EmptyFamily,
  PreconditionUnverified,
  SearchSpaceTooLarge,
  NotPartition,
  NotCompatible,
  NonIntegralRestriction,
  NotGInvariant,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Verification failures are "the math did not check out" rather than
  /// "the input was malformed".
  bool is_verification_failure() const noexcept {
    return code_ == ErrorCode::VerificationFailed ||
           code_ == ErrorCode::InternalVerificationFailed;
  }

 private:
  ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotSolvable: return "NotSolvable";
    case ErrorCode::NotLinear: return "NotLinear";
    case ErrorCode::IndexNotPrime: return "IndexNotPrime";
    case ErrorCode::NotRational: return "NotRational";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::InternalVerificationFailed: return "InternalVerificationFailed";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::PreconditionUnverified: return "PreconditionUnverified";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::NotPartition: return "NotPartition";
    case ErrorCode::NotCompatible: return "NotCompatible";
    case ErrorCode::NonIntegralRestriction: return "NonIntegralRestriction";
    case ErrorCode::NotGInvariant: return "NotGInvariant";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace hk
