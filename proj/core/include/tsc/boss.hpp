#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tsc/dataset.hpp"

namespace tsc {

struct SfaParams {
  std::size_t window_length = 10;
  std::size_t word_length = 8;
  std::size_t alphabet_size = 4;
  bool normalize = true;

  friend bool operator==(const SfaParams&, const SfaParams&) = default;
};

/// Multiple Coefficient Binning thresholds: one strictly increasing list of
/// alphabet_size - 1 values per word position.
struct Breakpoints {
  std::vector<std::vector<double>> per_coefficient;

  [[nodiscard]] bool empty() const noexcept { return per_coefficient.empty(); }
};

/// Sparse word -> count histogram, sorted by word code.
struct WordHistogram {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> entries;

  [[nodiscard]] std::uint32_t count(std::uint64_t word) const;
  [[nodiscard]] std::size_t total() const;
  friend bool operator==(const WordHistogram&, const WordHistogram&) = default;
};

/// The word_length real/imaginary DFT values an SFA word is built from:
/// (re_k, im_k) pairs with im_k = -sum x_t sin(2 pi k t / n), starting at
/// k = 1 on the z-normalised window when params.normalize, else at k = 0 on
/// the raw window.
std::vector<double> sfa_coefficients(std::span<const double> window, const SfaParams& params);

/// Symbol for one value: the number of thresholds strictly below it.
std::size_t sfa_symbol(double value, std::span<const double> thresholds);

/// Packs the discretised coefficients base alphabet_size, first coefficient
/// most significant. Throws UnfittedBreakpoints / LengthMismatch.
std::uint64_t sfa_word(std::span<const double> window, const SfaParams& params, const Breakpoints& breakpoints);

/// Equi-depth (linear-interpolated quantile) thresholds per coefficient over
/// every sliding window of every training series. Throws WindowTooLong.
Breakpoints fit_breakpoints(const Dataset& train, const SfaParams& params);

/// Stride-1 sliding windows with numerosity reduction. Throws WindowTooLong.
WordHistogram series_to_histogram(std::span<const double> series, const SfaParams& params,
                                  const Breakpoints& breakpoints);

/// Sum over words in `a` of (a[w] - b[w])^2. Not symmetric. May return +inf
/// once the partial sum exceeds `cutoff`.
double boss_distance(const WordHistogram& a, const WordHistogram& b,
                     double cutoff = std::numeric_limits<double>::infinity());

struct BossIndividualModel {
  SfaParams params;
  Breakpoints breakpoints;
  std::vector<WordHistogram> train_histograms;
  std::vector<std::size_t> train_labels;
  double train_accuracy = 0.0;

  /// 1NN class index under boss_distance, ties to the earliest train case.
  [[nodiscard]] std::size_t classify(const WordHistogram& query) const;
};

BossIndividualModel boss_individual_fit(const Dataset& train, const SfaParams& params);

/// Leave-one-out 1NN accuracy of a histogram set, ties to the earlier index.
double loo_accuracy(std::span<const WordHistogram> histograms, std::span<const std::size_t> labels);

/// Indices i with accuracies[i] >= threshold * max(accuracies).
std::vector<std::size_t> retain_by_accuracy(std::span<const double> accuracies, double threshold);

struct BossEnsembleConfig {
  bool randomised_ensemble = false;
  std::size_t n_parameter_samples = 250;
  std::size_t max_ensemble_size = 50;
  std::optional<double> time_limit_minutes;
  double retention_threshold = 0.92;
  std::uint64_t seed = 0;
};

struct BossEnsembleModel {
  std::vector<BossIndividualModel> members;
  bool accuracy_weighted = false;  // cBOSS: vote weight train_accuracy^4
  std::vector<std::string> class_labels;
  std::size_t series_length = 0;
  std::size_t parameters_evaluated = 0;
};

/// Window lengths (10 even steps over [10, L]) x normalise {true, false} x
/// word lengths {16, 14, 12, 10, 8} restricted to word <= window. Throws
/// NoViableParameters when L < 10.
std::vector<SfaParams> boss_parameter_space(std::size_t series_length);

BossEnsembleModel boss_ensemble_fit(const Dataset& train, const BossEnsembleConfig& config);

std::vector<std::vector<double>> boss_predict_proba(const BossEnsembleModel& model, const Dataset& test);

}  // namespace tsc
