#include "tsc/interval.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "tsc/error.hpp"
#include "tsc/parallel.hpp"
#include "tsc/stats.hpp"

namespace tsc {

std::vector<Interval> sample_intervals(std::size_t series_length, std::size_t how_many, std::size_t min_length,
                                       Rng& rng) {
  if (min_length == 0 || min_length > series_length) {
    throw Error(ErrorCode::IntervalInfeasible, "minimum interval length " + std::to_string(min_length) +
                                                   " does not fit series length " + std::to_string(series_length));
  }
  std::vector<Interval> out;
  out.reserve(how_many);
  for (std::size_t i = 0; i < how_many; ++i) {
    const std::size_t start = uniform_index(rng, 0, series_length - min_length);
    const std::size_t length = uniform_index(rng, min_length, series_length - start);
    out.push_back({start, length});
  }
  return out;
}

std::size_t IntervalCount::resolve(std::size_t series_length) const {
  if (!use_sqrt) return std::max<std::size_t>(count, 1);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(series_length)))));
}

ComposedPipelineSpec tsf_pipeline_spec(const TsfConfig& config) {
  return {Segmenter::random_intervals(config.n_intervals, config.min_interval_length),
          {FeatureFunction::Mean, FeatureFunction::Std, FeatureFunction::Slope},
          TreeConfig{},
          config.n_trees,
          100,
          config.seed};
}

ComposedPipelineSpec rise_pipeline_spec(const RiseConfig& config) {
  return {Segmenter::single_random_interval(config.min_interval_length),
          {FeatureFunction::Acf, FeatureFunction::PowerSpectrum},
          TreeConfig{},
          config.n_trees,
          config.acf_maxlag,
          config.seed};
}

std::size_t feature_width(FeatureFunction f, std::size_t length, std::size_t acf_maxlag) {
  switch (f) {
    case FeatureFunction::Mean:
    case FeatureFunction::Std:
    case FeatureFunction::Slope: return 1;
    case FeatureFunction::Acf: return std::min(length - 1, acf_maxlag);
    case FeatureFunction::PowerSpectrum: return length / 2;
  }
  return 0;
}

namespace {

using IntervalDraw = std::function<std::vector<Interval>(std::size_t member, Rng& rng)>;
using RowExtractor = std::function<void(std::span<const double> series, const std::vector<Interval>& intervals,
                                        std::span<double> row)>;

void append_feature(FeatureFunction f, std::span<const double> x, std::size_t acf_maxlag, std::span<double> row,
                    std::size_t& col) {
  switch (f) {
    case FeatureFunction::Mean: row[col++] = mean(x); return;
    case FeatureFunction::Std: row[col++] = population_std(x); return;
    case FeatureFunction::Slope: row[col++] = ols_slope(x); return;
    case FeatureFunction::Acf:
      for (double v : acf_coefs(x, acf_maxlag)) row[col++] = v;
      return;
    case FeatureFunction::PowerSpectrum:
      for (double v : power_spectrum(x)) row[col++] = v;
      return;
  }
}

RowExtractor generic_extractor(std::vector<FeatureFunction> features, std::size_t acf_maxlag) {
  return [features = std::move(features), acf_maxlag](std::span<const double> series,
                                                     const std::vector<Interval>& intervals, std::span<double> row) {
    std::size_t col = 0;
    for (const auto& iv : intervals) {
      const auto x = series.subspan(iv.start, iv.length);
      for (auto f : features) append_feature(f, x, acf_maxlag, row, col);
    }
  };
}

std::size_t row_width(const std::vector<FeatureFunction>& features, const std::vector<Interval>& intervals,
                      std::size_t acf_maxlag) {
  std::size_t width = 0;
  for (const auto& iv : intervals) {
    for (auto f : features) width += feature_width(f, iv.length, acf_maxlag);
  }
  return width;
}

IntervalForestModel fit_members(const Dataset& train, std::vector<FeatureFunction> features, std::size_t acf_maxlag,
                                std::size_t n_members, std::uint64_t seed, const TreeConfig& base_learner,
                                const IntervalDraw& draw, const RowExtractor& extract) {
  if (train.empty()) throw Error(ErrorCode::EmptyTrainingSet, "training set is empty");
  if (n_members == 0) throw Error(ErrorCode::InvalidConfig, "ensemble needs at least one member");

  IntervalForestModel model;
  model.features = std::move(features);
  model.acf_maxlag = acf_maxlag;
  model.class_labels = train.class_labels();
  model.series_length = train.series_length();
  model.members.resize(n_members);

  parallel_for(n_members, [&](std::size_t m) {
    Rng rng = make_rng(seed, m);
    auto intervals = draw(m, rng);
    TreeConfig tree_config = base_learner;
    tree_config.seed = rng();

    FeatureMatrix X(train.size(), row_width(model.features, intervals, acf_maxlag));
    for (std::size_t i = 0; i < train.size(); ++i) extract(train.series(i), intervals, X.row(i));
    model.members[m] = {std::move(intervals),
                        fit_decision_tree(X, train.class_indices(), train.n_classes(), tree_config)};
  });
  return model;
}

}  // namespace

TsfModel tsf_fit(const Dataset& train, const TsfConfig& config) {
  const std::size_t length = train.series_length();
  const std::size_t k = config.n_intervals.resolve(length);
  const std::size_t min_length = config.min_interval_length;
  if (min_length < 2) throw Error(ErrorCode::InvalidConfig, "TSF intervals need at least 2 points");
  if (min_length > length) {
    throw Error(ErrorCode::IntervalInfeasible, "min_interval_length exceeds the series length");
  }
  return fit_members(
      train, {FeatureFunction::Mean, FeatureFunction::Std, FeatureFunction::Slope}, 100, config.n_trees, config.seed,
      TreeConfig{}, [&](std::size_t, Rng& rng) { return sample_intervals(length, k, min_length, rng); },
      [](std::span<const double> series, const std::vector<Interval>& intervals, std::span<double> row) {
        std::size_t col = 0;
        for (const auto& iv : intervals) {
          const auto f = interval_summary(series.subspan(iv.start, iv.length));
          row[col++] = f.mean;
          row[col++] = f.std;
          row[col++] = f.slope;
        }
      });
}

RiseModel rise_fit(const Dataset& train, const RiseConfig& config) {
  const std::size_t length = train.series_length();
  const std::size_t min_length = config.min_interval_length;
  if (min_length < 2) throw Error(ErrorCode::InvalidConfig, "RISE intervals need at least 2 points");
  if (min_length > length) {
    throw Error(ErrorCode::IntervalInfeasible, "min_interval_length exceeds the series length");
  }
  const std::size_t maxlag = config.acf_maxlag;
  return fit_members(
      train, {FeatureFunction::Acf, FeatureFunction::PowerSpectrum}, maxlag, config.n_trees, config.seed,
      TreeConfig{},
      [&](std::size_t member, Rng& rng) {
        if (member == 0) return std::vector<Interval>{{0, length}};
        return sample_intervals(length, 1, min_length, rng);
      },
      [maxlag](std::span<const double> series, const std::vector<Interval>& intervals, std::span<double> row) {
        const auto x = series.subspan(intervals.front().start, intervals.front().length);
        const auto acf = acf_coefs(x, maxlag);
        const auto ps = power_spectrum(x);
        std::copy(acf.begin(), acf.end(), row.begin());
        std::copy(ps.begin(), ps.end(), row.begin() + static_cast<std::ptrdiff_t>(acf.size()));
      });
}

IntervalForestModel composed_fit(const Dataset& train, const ComposedPipelineSpec& spec) {
  if (spec.feature_functions.empty()) throw Error(ErrorCode::InvalidConfig, "pipeline has no feature functions");
  const std::size_t length = train.series_length();
  const std::size_t min_length = spec.segmenter.min_length;
  const bool needs_two = std::any_of(spec.feature_functions.begin(), spec.feature_functions.end(),
                                     [](auto f) { return f != FeatureFunction::Mean; });
  if (min_length < (needs_two ? 2u : 1u)) throw Error(ErrorCode::InvalidConfig, "segment minimum length too small");
  if (min_length > length) throw Error(ErrorCode::IntervalInfeasible, "segment minimum length exceeds series length");
  const std::size_t k = spec.segmenter.kind == Segmenter::Kind::SingleRandomInterval
                            ? 1
                            : spec.segmenter.count.resolve(length);
  return fit_members(
      train, spec.feature_functions, spec.acf_maxlag, spec.n_members, spec.seed, spec.base_learner,
      [&](std::size_t, Rng& rng) { return sample_intervals(length, k, min_length, rng); },
      generic_extractor(spec.feature_functions, spec.acf_maxlag));
}

std::vector<std::vector<double>> interval_predict_proba(const IntervalForestModel& model, const Dataset& test) {
  if (test.series_length() != model.series_length) {
    throw Error(ErrorCode::LengthMismatch, "test length " + std::to_string(test.series_length()) +
                                               " differs from training length " + std::to_string(model.series_length));
  }
  const std::size_t n_classes = model.class_labels.size();
  const auto extract = generic_extractor(model.features, model.acf_maxlag);
  std::vector<std::vector<double>> out(test.size(), std::vector<double>(n_classes, 0.0));
  std::vector<double> row;
  for (const auto& member : model.members) {
    row.assign(row_width(model.features, member.intervals, model.acf_maxlag), 0.0);
    for (std::size_t i = 0; i < test.size(); ++i) {
      extract(test.series(i), member.intervals, row);
      const auto& p = member.tree.predict_proba(row);
      for (std::size_t c = 0; c < n_classes; ++c) out[i][c] += p[c];
    }
  }
  const double scale = 1.0 / static_cast<double>(model.members.size());
  for (auto& p : out) {
    for (auto& v : p) v *= scale;
  }
  return out;
}

}  // namespace tsc
