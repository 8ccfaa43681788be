#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lorentzinv {

// Numeric values double as CLI exit codes and must stay stable.
enum class ErrorCode : int {
  ParseError = 2,
  NotLorentz = 3,
  CapExceeded = 4,
  ZeroBoost = 5,
  ShapeError = 6,
  BoundExceeded = 7,
  NotBlock = 8,
  NotInvolutive = 9,
  Central = 10,
  ZeroBeta = 11,
  BandLimitTooLarge = 12,
  NotAUnit = 13,
  EvaluationOverflow = 14,
  DivisionByZero = 15,
  NonRationalCoefficient = 16,
  NoExactConjugator = 17,
  UnsupportedGroup = 18,
  CertificateFailed = 19,
  Internal = 70,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lorentzinv
