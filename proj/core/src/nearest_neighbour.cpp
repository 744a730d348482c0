#include "tsc/nearest_neighbour.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tsc/error.hpp"
#include "tsc/stats.hpp"

namespace tsc {

namespace {

std::size_t ceil_fraction(double proportion, std::size_t n) {
  const auto k = static_cast<std::size_t>(std::ceil(proportion * static_cast<double>(n) - 1e-9));
  return std::clamp<std::size_t>(k, 1, n);
}

void require_proportion(double p, const char* name) {
  if (!(p > 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidConfig, std::string(name) + " must lie in (0, 1]");
}

// Random k-subset of [0, n), ascending.
std::vector<std::size_t> sample_sorted(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[uniform_index(rng, i, n - 1)]);
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<std::vector<double>> prepared_series(const Dataset& data, Measure m) {
  std::vector<std::vector<double>> out;
  out.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) out.push_back(prepare_series(m, data.series(i)));
  return out;
}

}  // namespace

NnModel nn_fit(const Dataset& train, const DistanceSpec& spec) {
  if (train.empty()) throw Error(ErrorCode::EmptyTrainingSet, "training set is empty");
  spec.validate();
  return {spec, prepared_series(train, spec.measure), train.class_indices(), train.class_labels(),
          train.series_length()};
}

NnPrediction nn1_classify(const NnModel& model, std::span<const double> query) {
  if (query.size() != model.series_length) {
    throw Error(ErrorCode::LengthMismatch, "query length differs from training length");
  }
  const auto q = prepare_series(model.spec.measure, query);
  double best = kNoCutoff;
  std::size_t best_index = 0;
  for (std::size_t j = 0; j < model.train_series.size(); ++j) {
    const double d = distance_prepared(model.spec, q, model.train_series[j], best);
    if (d < best) {
      best = d;
      best_index = j;
    }
  }
  NnPrediction out;
  out.class_index = model.train_labels[best_index];
  out.proba.assign(model.class_labels.size(), 0.0);
  out.proba[out.class_index] = 1.0;
  return out;
}

std::vector<std::vector<double>> nn_predict_proba(const NnModel& model, const Dataset& test) {
  std::vector<std::vector<double>> out(test.size());
  for (std::size_t i = 0; i < test.size(); ++i) out[i] = nn1_classify(model, test.series(i)).proba;
  return out;
}

double loo_nn_accuracy(const DistanceSpec& spec, std::span<const std::vector<double>> series,
                       std::span<const std::size_t> labels, std::span<const std::size_t> held_out) {
  if (series.size() < 2 || held_out.empty()) return 0.0;
  std::size_t correct = 0;
  for (auto i : held_out) {
    double best = kNoCutoff;
    std::size_t best_index = i == 0 ? 1 : 0;
    for (std::size_t j = 0; j < series.size(); ++j) {
      if (j == i) continue;
      const double d = distance_prepared(spec, series[i], series[j], best);
      if (d < best) {
        best = d;
        best_index = j;
      }
    }
    if (labels[best_index] == labels[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(held_out.size());
}

std::vector<std::size_t> stratified_subset(std::span<const std::size_t> labels, std::size_t n_classes,
                                           double proportion, Rng& rng) {
  require_proportion(proportion, "proportion_of_train_in_param_finding");
  const std::size_t n = labels.size();
  if (n == 0) return {};
  const std::size_t k = ceil_fraction(proportion, n);
  if (k == n) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<std::vector<std::size_t>> members(n_classes);
  for (std::size_t i = 0; i < n; ++i) members[labels[i]].push_back(i);

  // Largest remainder: floor of each quota, leftovers to the biggest
  // fractional parts (lower class index first on ties).
  std::vector<std::size_t> take(n_classes);
  std::vector<std::pair<double, std::size_t>> remainders;
  std::size_t allotted = 0;
  for (std::size_t c = 0; c < n_classes; ++c) {
    const double quota = static_cast<double>(k) * static_cast<double>(members[c].size()) / static_cast<double>(n);
    take[c] = static_cast<std::size_t>(std::floor(quota));
    allotted += take[c];
    remainders.emplace_back(quota - std::floor(quota), c);
  }
  std::stable_sort(remainders.begin(), remainders.end(), [](auto a, auto b) { return a.first > b.first; });
  for (std::size_t r = 0; allotted < k; ++r) {
    const std::size_t c = remainders[r % n_classes].second;
    if (take[c] < members[c].size()) {
      ++take[c];
      ++allotted;
    }
  }

  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < n_classes; ++c) {
    for (auto p : sample_sorted(members[c].size(), take[c], rng)) out.push_back(members[c][p]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TuneResult loocv_tune(const Dataset& train, const ParameterGrid& grid, const TuningEffort& effort, Rng& rng) {
  if (grid.options.empty()) throw Error(ErrorCode::GridEmpty, "parameter grid has no options");
  require_proportion(effort.proportion_of_param_options, "proportion_of_param_options");
  require_proportion(effort.proportion_of_train_in_param_finding, "proportion_of_train_in_param_finding");
  if (train.size() < 2) throw Error(ErrorCode::EmptyTrainingSet, "LOOCV needs at least two training cases");

  TuneResult result;
  result.options_evaluated =
      sample_sorted(grid.options.size(), ceil_fraction(effort.proportion_of_param_options, grid.options.size()), rng);
  result.held_out =
      stratified_subset(train.class_indices(), train.n_classes(), effort.proportion_of_train_in_param_finding, rng);

  const auto series = prepared_series(train, grid.measure);
  const auto& labels = train.class_indices();
  double best = -1.0;
  for (auto g : result.options_evaluated) {
    const DistanceSpec spec{grid.measure, grid.options[g]};
    const double acc = loo_nn_accuracy(spec, series, labels, result.held_out);
    if (acc > best) {
      best = acc;
      result.grid_index = g;
    }
  }
  result.params = grid.options[result.grid_index];
  if (result.held_out.size() == train.size()) {
    result.cv_accuracy = best;
  } else {
    std::vector<std::size_t> all(train.size());
    std::iota(all.begin(), all.end(), 0);
    result.cv_accuracy = loo_nn_accuracy({grid.measure, result.params}, series, labels, all);
  }
  return result;
}

GridContext grid_context(const Dataset& train) {
  std::vector<std::vector<double>> values;
  values.reserve(train.size());
  for (const auto& c : train.cases()) values.push_back(c.values);
  return {pooled_std(values), train.series_length()};
}

}  // namespace tsc
