#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tsc {

enum class ErrorCode {
  // .ts parsing and dataset construction
  MalformedHeader,
  LengthMismatch,
  UnknownLabel,
  NonNumericValue,
  MultivariateUnsupported,
  UnequalLengthUnsupported,
  InvalidDataset,
  IncompatibleDatasets,
  // numeric kernels
  IntervalTooShort,
  SeriesTooShort,
  IntervalInfeasible,
  // learners
  EmptyTrainingSet,
  DimensionMismatch,
  InconsistentDimensions,
  InvalidConfig,
  NotTunable,
  GridEmpty,
  SingleClassNode,
  // dictionary
  UnfittedBreakpoints,
  WindowTooLong,
  NoViableParameters,
  // shapelets
  ShapeletTooLong,
  DegenerateLabels,
  ContractTooSmall,
  // evaluation
  EmptyResults,
  TooFewSamples,
  DatasetNotFound,
  UnknownClassifier,
  MalformedResults,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tsc
