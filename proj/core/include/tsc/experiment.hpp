#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "tsc/classifier.hpp"
#include "tsc/metrics.hpp"
#include "tsc/results.hpp"

namespace tsc {

struct ExperimentConfig {
  std::string classifier;
  std::filesystem::path data_dir;
  std::string problem;
  std::size_t resample_id = 0;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> out_dir;  // no file written when unset
  ClassifierOptions options;
};

struct ExperimentOutcome {
  ClassifierResults results;
  MetricSet metrics;
  std::size_t n_classes = 0;
  std::optional<std::filesystem::path> results_file;
};

/// Loads <data_dir>/<problem>/<problem>_TRAIN.ts and _TEST.ts, resamples,
/// fits (timed on a monotonic clock) and predicts (timed). The classifier
/// seed is derive_seed(seed, resample_id). Throws DatasetNotFound,
/// UnknownClassifier and whatever the classifier throws.
ExperimentOutcome run_experiment(const ExperimentConfig& config);

/// One-line JSON summary of an experiment.
std::string summary_json(const ExperimentOutcome& outcome);

}  // namespace tsc
