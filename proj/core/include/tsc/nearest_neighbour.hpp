#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tsc/dataset.hpp"
#include "tsc/distances.hpp"
#include "tsc/random.hpp"

namespace tsc {

/// 1NN over a fixed distance. Training series are stored already
/// derivative-transformed for the derivative measures.
struct NnModel {
  DistanceSpec spec;
  std::vector<std::vector<double>> train_series;
  std::vector<std::size_t> train_labels;
  std::vector<std::string> class_labels;
  std::size_t series_length = 0;
};

NnModel nn_fit(const Dataset& train, const DistanceSpec& spec);

struct NnPrediction {
  std::size_t class_index = 0;
  std::vector<double> proba;  // one-hot
};

/// Nearest training case, ties to the earliest index. Throws LengthMismatch.
NnPrediction nn1_classify(const NnModel& model, std::span<const double> query);

std::vector<std::vector<double>> nn_predict_proba(const NnModel& model, const Dataset& test);

/// Fraction of `held_out` cases whose nearest other case (ties to the
/// earliest index) shares their label. `series` must be prepared for the
/// spec's measure.
double loo_nn_accuracy(const DistanceSpec& spec, std::span<const std::vector<double>> series,
                       std::span<const std::size_t> labels, std::span<const std::size_t> held_out);

struct TuningEffort {
  double proportion_of_param_options = 1.0;
  double proportion_of_train_in_param_finding = 1.0;
};

struct TuneResult {
  DistanceParams params;
  std::size_t grid_index = 0;
  double cv_accuracy = 0.0;  // winner rescored over the whole training set
  std::vector<std::size_t> options_evaluated;  // grid indices, ascending
  std::vector<std::size_t> held_out;           // case indices, ascending
};

/// ceil(proportion * n) case indices, stratified by class with largest
/// remainder allocation, chosen at random within each class, ascending.
std::vector<std::size_t> stratified_subset(std::span<const std::size_t> labels, std::size_t n_classes,
                                           double proportion, Rng& rng);

/// Throws GridEmpty, InvalidConfig (proportions outside (0, 1]),
/// EmptyTrainingSet (fewer than two cases).
TuneResult loocv_tune(const Dataset& train, const ParameterGrid& grid, const TuningEffort& effort, Rng& rng);

/// Grid statistics of a training set: pooled standard deviation and length.
GridContext grid_context(const Dataset& train);

}  // namespace tsc
