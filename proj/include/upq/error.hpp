#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace upq {

/// Machine-readable failure categories. The names are part of the CLI/JSON
/// contract and must not be renamed.
enum class ErrorCode {
  RankError,
  DegreeError,
  CurveError,
  OutOfRange,
  WindowUnbounded,
  WindowRequired,
  HypothesisError,
  DegLNonpositive,
  RadiusTooSmall,
  ParseError,
  Overflow,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::RankError: return "RankError";
    case ErrorCode::DegreeError: return "DegreeError";
    case ErrorCode::CurveError: return "CurveError";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::WindowUnbounded: return "WindowUnbounded";
    case ErrorCode::WindowRequired: return "WindowRequired";
    case ErrorCode::HypothesisError: return "HypothesisError";
    case ErrorCode::DegLNonpositive: return "DegLNonpositive";
    case ErrorCode::RadiusTooSmall: return "RadiusTooSmall";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace upq
