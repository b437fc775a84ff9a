#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bch {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NonFinite,
  ParseError,
  NullCone,
  ZeroChannel,
  NotPositiveDefinite,
  ConvergenceFailure,
  NotSelfAdjoint,
  PairingOverflow,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NullCone: return "NullCone";
    case ErrorCode::ZeroChannel: return "ZeroChannel";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NotSelfAdjoint: return "NotSelfAdjoint";
    case ErrorCode::PairingOverflow: return "PairingOverflow";
  }
  return "Unknown";
}

/// Domain errors are properties of well-formed input (a zero divisor, a
/// non-self-adjoint operator, a solver that did not converge). Everything
/// else is a malformed or inconsistent request.
constexpr bool is_domain_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NullCone:
    case ErrorCode::ZeroChannel:
    case ErrorCode::ConvergenceFailure:
    case ErrorCode::NotSelfAdjoint:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

inline void require(bool condition, ErrorCode code, const char* message) {
  if (!condition) throw Error(code, message);
}

}  // namespace detail
}  // namespace bch
