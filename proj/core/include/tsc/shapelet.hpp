#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsc/dataset.hpp"
#include "tsc/tree.hpp"

namespace tsc {

struct Shapelet {
  std::vector<double> values;  // z-normalised
  std::size_t source_case = 0;
  std::size_t source_start = 0;
  double quality = 0.0;  // information gain, bits
  std::size_t class_index = 0;
  std::string class_origin;

  friend bool operator==(const Shapelet&, const Shapelet&) = default;
};

/// Minimum over alignments of the mean squared difference between `shapelet`
/// and the z-normalised subsequence of `series`. Throws ShapeletTooLong.
double subsequence_distance(std::span<const double> shapelet, std::span<const double> series);

/// Best one-vs-rest information gain (bits) over threshold splits of the
/// distances, where `labels[i] == target` is the positive group. Throws
/// DegenerateLabels when fewer than two cases or one group is empty.
double shapelet_quality(std::span<const double> distances, std::span<const std::size_t> labels, std::size_t target);

struct StcConfig {
  // A candidate-count contract takes precedence; otherwise the search runs
  // for contract_minutes of wall-clock time.
  std::optional<std::size_t> max_candidates;
  double contract_minutes = 300.0;
  std::optional<std::size_t> max_retained_shapelets;  // default min(10 n, 1000)
  std::size_t min_length = 3;
  std::optional<std::size_t> max_length;  // default series length
  std::size_t forest_trees = 500;
  std::uint64_t seed = 0;
};

/// Candidates cycle through the classes; each draws a case of that class, a
/// length in [min_length, max_length] and a start. Retained shapelets have
/// no same-case overlaps and are ordered by quality descending, then
/// (source_case, source_start). Throws ContractTooSmall, DegenerateLabels,
/// InvalidConfig.
std::vector<Shapelet> random_shapelet_search(const Dataset& train, const StcConfig& config,
                                             std::size_t* candidates_evaluated = nullptr);

/// Row i holds the distance of every shapelet to case i.
FeatureMatrix shapelet_transform(std::span<const Shapelet> shapelets, const Dataset& data);

struct StcModel {
  std::vector<Shapelet> shapelets;
  ForestModel forest;
  std::vector<std::string> class_labels;
  std::size_t series_length = 0;
  std::size_t candidates_evaluated = 0;
};

StcModel stc_fit(const Dataset& train, const StcConfig& config);

std::vector<std::vector<double>> stc_predict_proba(const StcModel& model, const Dataset& test);

}  // namespace tsc
