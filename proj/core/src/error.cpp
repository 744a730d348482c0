#include "tsc/error.hpp"

namespace tsc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::NonNumericValue: return "NonNumericValue";
    case ErrorCode::MultivariateUnsupported: return "MultivariateUnsupported";
    case ErrorCode::UnequalLengthUnsupported: return "UnequalLengthUnsupported";
    case ErrorCode::InvalidDataset: return "InvalidDataset";
    case ErrorCode::IncompatibleDatasets: return "IncompatibleDatasets";
    case ErrorCode::IntervalTooShort: return "IntervalTooShort";
    case ErrorCode::SeriesTooShort: return "SeriesTooShort";
    case ErrorCode::IntervalInfeasible: return "IntervalInfeasible";
    case ErrorCode::EmptyTrainingSet: return "EmptyTrainingSet";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InconsistentDimensions: return "InconsistentDimensions";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::NotTunable: return "NotTunable";
    case ErrorCode::GridEmpty: return "GridEmpty";
    case ErrorCode::SingleClassNode: return "SingleClassNode";
    case ErrorCode::UnfittedBreakpoints: return "UnfittedBreakpoints";
    case ErrorCode::WindowTooLong: return "WindowTooLong";
    case ErrorCode::NoViableParameters: return "NoViableParameters";
    case ErrorCode::ShapeletTooLong: return "ShapeletTooLong";
    case ErrorCode::DegenerateLabels: return "DegenerateLabels";
    case ErrorCode::ContractTooSmall: return "ContractTooSmall";
    case ErrorCode::EmptyResults: return "EmptyResults";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::DatasetNotFound: return "DatasetNotFound";
    case ErrorCode::UnknownClassifier: return "UnknownClassifier";
    case ErrorCode::MalformedResults: return "MalformedResults";
  }
  return "Unknown";
}

}  // namespace tsc
