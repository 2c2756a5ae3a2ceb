#pragma once

#include <stdexcept>
#include <string>

namespace bidscreen {

enum class ErrorCode {
  // ingestion / data shape
  MissingColumn,
  NonPositiveBid,
  EmptyFile,
  DuplicateTenderConflict,
  TooFewBids,
  EmptyCompetitiveSet,
  EmptyPool,
  SingleClassDataset,
  EmptyAfterFilter,
  DegenerateSpec,
  EmptySample,
  // numeric
  ZeroDispersion,
  ZeroDenominator,
  UndefinedScreen,
  DimensionMismatch,
  EmptyTrainingSet,
  NonConvergence,
  DegenerateFold,
};

/// Library-wide exception. `code` lets the CLI map failures onto its
/// data-error / numeric-error exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

  bool is_numeric() const {
    switch (code_) {
      case ErrorCode::ZeroDispersion:
      case ErrorCode::ZeroDenominator:
      case ErrorCode::UndefinedScreen:
      case ErrorCode::DimensionMismatch:
      case ErrorCode::NonConvergence:
      case ErrorCode::DegenerateFold:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorCode code_;
};

}  // namespace bidscreen
