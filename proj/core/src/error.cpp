#include "lorentzinv/error.hpp"

namespace lorentzinv {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotLorentz: return "NotLorentz";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ZeroBoost: return "ZeroBoost";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NotBlock: return "NotBlock";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::Central: return "Central";
    case ErrorCode::ZeroBeta: return "ZeroBeta";
    case ErrorCode::BandLimitTooLarge: return "BandLimitTooLarge";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::EvaluationOverflow: return "EvaluationOverflow";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonRationalCoefficient: return "NonRationalCoefficient";
    case ErrorCode::NoExactConjugator: return "NoExactConjugator";
    case ErrorCode::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorCode::CertificateFailed: return "CertificateFailed";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace lorentzinv
