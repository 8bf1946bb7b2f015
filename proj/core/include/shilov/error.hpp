#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shilov {

// Every failure the library reports carries one of these codes. The CLI maps
// them to exit codes through error_category().
enum class ErrorCode {
  DimensionMismatch,
  RankMismatch,
  NotTripotent,
  SpectrumOutOfRange,
  InvalidTurn,
  NotMonotone,
  NonSymmetricInput,
  NotBoundary,
  NotInClosedBall,
  NotTransversal,
  InvalidMoebius,
  SingularDenominator,
  NoConvergence,
  RankUnstable,
  NotLagrangian,
  NotSymmetricUnitary,
  ExtractionRankFailure,
  DegenerateFrame,
  SignatureUnstable,
  Infeasible,
  OutOfRange,
  NotIsotropic,
  DegeneratePair,
  UnknownFlavor,
  ParseError,
};

enum class ErrorCategory { Validation, Numerical, Parse };

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotTripotent: return "NotTripotent";
    case ErrorCode::SpectrumOutOfRange: return "SpectrumOutOfRange";
    case ErrorCode::InvalidTurn: return "InvalidTurn";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::NonSymmetricInput: return "NonSymmetricInput";
    case ErrorCode::NotBoundary: return "NotBoundary";
    case ErrorCode::NotInClosedBall: return "NotInClosedBall";
    case ErrorCode::NotTransversal: return "NotTransversal";
    case ErrorCode::InvalidMoebius: return "InvalidMoebius";
    case ErrorCode::SingularDenominator: return "SingularDenominator";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::RankUnstable: return "RankUnstable";
    case ErrorCode::NotLagrangian: return "NotLagrangian";
    case ErrorCode::NotSymmetricUnitary: return "NotSymmetricUnitary";
    case ErrorCode::ExtractionRankFailure: return "ExtractionRankFailure";
    case ErrorCode::DegenerateFrame: return "DegenerateFrame";
    case ErrorCode::SignatureUnstable: return "SignatureUnstable";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::UnknownFlavor: return "UnknownFlavor";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

constexpr ErrorCategory error_category(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoConvergence:
    case ErrorCode::RankUnstable:
    case ErrorCode::SignatureUnstable:
      return ErrorCategory::Numerical;
    case ErrorCode::ParseError:
      return ErrorCategory::Parse;
    default:
      return ErrorCategory::Validation;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return error_category(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace shilov
