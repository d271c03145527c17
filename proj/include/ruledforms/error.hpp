#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ruledforms {

/// Domain error codes. The names are part of the CLI contract and are
/// printed verbatim in the "error" field of failure output.
enum class ErrorCode {
  InvalidCurveType,
  InvalidPoint,
  MixedCurves,
  EmptyF,
  InvalidDimension,
  StructureMismatch,
  RealLocusOutsideRealPart,
  RankOutOfRange,
  NotApplicable,
  UnsupportedRank,
  OddDimension,
  EvenDimension,
  NotEmptyBase,
  InvalidKey,
};

constexpr std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidCurveType: return "InvalidCurveType";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::MixedCurves: return "MixedCurves";
    case ErrorCode::EmptyF: return "EmptyF";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::StructureMismatch: return "StructureMismatch";
    case ErrorCode::RealLocusOutsideRealPart: return "RealLocusOutsideRealPart";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::EvenDimension: return "EvenDimension";
    case ErrorCode::NotEmptyBase: return "NotEmptyBase";
    case ErrorCode::InvalidKey: return "InvalidKey";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ruledforms
