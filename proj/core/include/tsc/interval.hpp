#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tsc/dataset.hpp"
#include "tsc/random.hpp"
#include "tsc/tree.hpp"

namespace tsc {

struct Interval {
  std::size_t start = 0;
  std::size_t length = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Draws `how_many` intervals: start uniform in [0, L - min_length], then
/// length uniform in [min_length, L - start]. Throws IntervalInfeasible when
/// min_length is 0 or exceeds L.
std::vector<Interval> sample_intervals(std::size_t series_length, std::size_t how_many, std::size_t min_length,
                                       Rng& rng);

/// Either ceil(sqrt(series_length)) or a fixed count.
struct IntervalCount {
  bool use_sqrt = true;
  std::size_t count = 0;

  static IntervalCount sqrt() { return {true, 0}; }
  static IntervalCount fixed(std::size_t n) { return {false, n}; }
  [[nodiscard]] std::size_t resolve(std::size_t series_length) const;
};

struct TsfConfig {
  std::size_t n_trees = 100;
  IntervalCount n_intervals = IntervalCount::sqrt();
  std::size_t min_interval_length = 3;
  std::uint64_t seed = 0;
};

struct RiseConfig {
  std::size_t n_trees = 50;
  std::size_t min_interval_length = 5;
  std::size_t acf_maxlag = 100;
  std::uint64_t seed = 0;
};

enum class FeatureFunction { Mean, Std, Slope, Acf, PowerSpectrum };

struct Segmenter {
  enum class Kind { RandomIntervals, SingleRandomInterval } kind = Kind::RandomIntervals;
  IntervalCount count = IntervalCount::sqrt();
  std::size_t min_length = 3;

  static Segmenter random_intervals(IntervalCount count, std::size_t min_length = 3) {
    return {Kind::RandomIntervals, count, min_length};
  }
  static Segmenter single_random_interval(std::size_t min_length) {
    return {Kind::SingleRandomInterval, IntervalCount::fixed(1), min_length};
  }
};

/// Generic segment -> feature union -> tree pipeline, replicated n_members
/// times with member i seeded from (seed, i).
struct ComposedPipelineSpec {
  Segmenter segmenter;
  std::vector<FeatureFunction> feature_functions;
  TreeConfig base_learner;
  std::size_t n_members = 100;
  std::size_t acf_maxlag = 100;
  std::uint64_t seed = 0;
};

ComposedPipelineSpec tsf_pipeline_spec(const TsfConfig& config);
ComposedPipelineSpec rise_pipeline_spec(const RiseConfig& config);

struct IntervalMember {
  std::vector<Interval> intervals;
  DecisionTree tree;
};

/// Fitted interval ensemble. TSF, RISE and composed pipelines share this
/// representation: each member's feature row is the concatenation, over its
/// intervals, of every feature function applied to that interval.
struct IntervalForestModel {
  std::vector<FeatureFunction> features;
  std::size_t acf_maxlag = 100;
  std::vector<IntervalMember> members;
  std::vector<std::string> class_labels;
  std::size_t series_length = 0;
};

using TsfModel = IntervalForestModel;
using RiseModel = IntervalForestModel;

TsfModel tsf_fit(const Dataset& train, const TsfConfig& config);

/// Member 0 uses the whole series; later members draw one random interval.
RiseModel rise_fit(const Dataset& train, const RiseConfig& config);

/// Throws InvalidConfig for an empty feature list.
IntervalForestModel composed_fit(const Dataset& train, const ComposedPipelineSpec& spec);

/// Average of member leaf distributions, one row per test case. Throws
/// LengthMismatch when the test length differs from training.
std::vector<std::vector<double>> interval_predict_proba(const IntervalForestModel& model, const Dataset& test);

/// Number of feature values `f` yields on an interval of `length` points.
std::size_t feature_width(FeatureFunction f, std::size_t length, std::size_t acf_maxlag);

}  // namespace tsc
