#include "tsc/shapelet.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "tsc/error.hpp"
#include "tsc/parallel.hpp"
#include "tsc/random.hpp"
#include "tsc/stats.hpp"

namespace tsc {

namespace {

double entropy2(double pos, double neg) {
  const double n = pos + neg;
  double h = 0.0;
  for (double c : {pos, neg}) {
    if (c > 0.0) h -= (c / n) * std::log2(c / n);
  }
  return h;
}

struct Candidate {
  std::size_t case_index;
  std::size_t start;
  std::size_t length;
};

Candidate draw_candidate(const std::vector<std::vector<std::size_t>>& by_class, std::size_t series_length,
                         std::size_t min_length, std::size_t max_length, std::uint64_t seed, std::size_t k) {
  Rng rng = make_rng(seed, k);
  const auto& members = by_class[k % by_class.size()];
  const std::size_t case_index = members[uniform_index(rng, 0, members.size() - 1)];
  const std::size_t length = uniform_index(rng, min_length, max_length);
  const std::size_t start = uniform_index(rng, 0, series_length - length);
  return {case_index, start, length};
}

Shapelet score(const Dataset& train, const Candidate& c) {
  Shapelet s;
  s.values = znormalize(train.series(c.case_index).subspan(c.start, c.length));
  s.source_case = c.case_index;
  s.source_start = c.start;
  s.class_index = train.class_index(c.case_index);
  s.class_origin = train[c.case_index].label;
  std::vector<double> distances(train.size());
  for (std::size_t i = 0; i < train.size(); ++i) distances[i] = subsequence_distance(s.values, train.series(i));
  s.quality = shapelet_quality(distances, train.class_indices(), s.class_index);
  return s;
}

bool ranks_before(const Shapelet& a, const Shapelet& b) {
  if (a.quality != b.quality) return a.quality > b.quality;
  if (a.source_case != b.source_case) return a.source_case < b.source_case;
  return a.source_start < b.source_start;
}

bool overlaps(const Shapelet& a, const Shapelet& b) {
  return a.source_case == b.source_case && a.source_start < b.source_start + b.values.size() &&
         b.source_start < a.source_start + a.values.size();
}

// Best-first greedy selection: a candidate overlapping an already kept one
// from the same case is dropped.
std::vector<Shapelet> select(std::vector<Shapelet> pool, std::size_t max_retained) {
  std::sort(pool.begin(), pool.end(), ranks_before);
  std::vector<Shapelet> kept;
  for (auto& s : pool) {
    if (kept.size() == max_retained) break;
    if (std::none_of(kept.begin(), kept.end(), [&](const Shapelet& k) { return overlaps(s, k); })) {
      kept.push_back(std::move(s));
    }
  }
  return kept;
}

}  // namespace

double subsequence_distance(std::span<const double> shapelet, std::span<const double> series) {
  const std::size_t m = shapelet.size();
  if (m == 0 || m > series.size()) {
    throw Error(ErrorCode::ShapeletTooLong, "shapelet length " + std::to_string(m) +
                                                " does not fit series length " + std::to_string(series.size()));
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s + m <= series.size(); ++s) {
    const auto window = series.subspan(s, m);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double v : window) sum += v;
    const double mu = sum / static_cast<double>(m);
    for (double v : window) sum_sq += (v - mu) * (v - mu);
    const double sd = std::sqrt(sum_sq / static_cast<double>(m));
    const double inv = sd < 1e-8 ? 0.0 : 1.0 / sd;
    double acc = 0.0;
    for (std::size_t t = 0; t < m && acc < best; ++t) {
      const double d = (window[t] - mu) * inv - shapelet[t];
      acc += d * d;
    }
    best = std::min(best, acc);
  }
  return best / static_cast<double>(m);
}

double shapelet_quality(std::span<const double> distances, std::span<const std::size_t> labels, std::size_t target) {
  if (distances.size() != labels.size()) throw Error(ErrorCode::DimensionMismatch, "distances and labels differ");
  if (distances.size() < 2) throw Error(ErrorCode::DegenerateLabels, "quality needs at least two cases");
  std::vector<std::size_t> order(distances.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return distances[a] < distances[b]; });

  double pos_total = 0.0;
  for (auto l : labels) pos_total += l == target ? 1.0 : 0.0;
  const double neg_total = static_cast<double>(labels.size()) - pos_total;
  if (pos_total == 0.0 || neg_total == 0.0) {
    throw Error(ErrorCode::DegenerateLabels, "one-vs-rest split leaves a group empty");
  }
  const double n = static_cast<double>(labels.size());
  const double parent = entropy2(pos_total, neg_total);

  double best = 0.0;
  double pos_left = 0.0;
  double neg_left = 0.0;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    (labels[order[k]] == target ? pos_left : neg_left) += 1.0;
    if (distances[order[k]] == distances[order[k + 1]]) continue;
    const double left = pos_left + neg_left;
    const double right = n - left;
    const double gain = parent - (left / n) * entropy2(pos_left, neg_left) -
                        (right / n) * entropy2(pos_total - pos_left, neg_total - neg_left);
    best = std::max(best, gain);
  }
  return std::max(best, 0.0);
}

std::vector<Shapelet> random_shapelet_search(const Dataset& train, const StcConfig& config,
                                             std::size_t* candidates_evaluated) {
  if (train.empty()) throw Error(ErrorCode::EmptyTrainingSet, "training set is empty");
  const std::size_t length = train.series_length();
  const std::size_t max_length = config.max_length.value_or(length);
  if (config.min_length == 0 || config.min_length > max_length || max_length > length) {
    throw Error(ErrorCode::InvalidConfig, "shapelet lengths must satisfy 1 <= min <= max <= series length");
  }
  std::vector<std::vector<std::size_t>> by_class(train.n_classes());
  for (std::size_t i = 0; i < train.size(); ++i) by_class[train.class_index(i)].push_back(i);
  std::erase_if(by_class, [](const auto& v) { return v.empty(); });
  if (by_class.size() < 2) throw Error(ErrorCode::DegenerateLabels, "shapelet search needs two classes present");

  const std::size_t max_retained =
      config.max_retained_shapelets.value_or(std::min<std::size_t>(10 * train.size(), 1000));
  if (max_retained == 0) throw Error(ErrorCode::InvalidConfig, "max_retained_shapelets must be positive");

  auto candidate = [&](std::size_t k) {
    return draw_candidate(by_class, length, config.min_length, max_length, config.seed, k);
  };

  std::vector<Shapelet> pool;
  std::size_t evaluated = 0;
  if (config.max_candidates) {
    evaluated = *config.max_candidates;
    if (evaluated == 0) throw Error(ErrorCode::ContractTooSmall, "zero candidates requested");
    pool.resize(evaluated);
    parallel_for(evaluated, [&](std::size_t k) { pool[k] = score(train, candidate(k)); });
  } else {
    const auto start = std::chrono::steady_clock::now();
    const auto budget = std::chrono::duration<double, std::ratio<60>>(config.contract_minutes);
    while (std::chrono::steady_clock::now() - start < budget) {
      pool.push_back(score(train, candidate(evaluated++)));
      if (pool.size() >= 4 * max_retained) pool = select(std::move(pool), max_retained);
    }
    if (evaluated == 0) throw Error(ErrorCode::ContractTooSmall, "time contract expired before any candidate");
  }
  if (candidates_evaluated) *candidates_evaluated = evaluated;
  return select(std::move(pool), max_retained);
}

FeatureMatrix shapelet_transform(std::span<const Shapelet> shapelets, const Dataset& data) {
  FeatureMatrix X(data.size(), shapelets.size());
  parallel_for(data.size(), [&](std::size_t i) {
    auto row = X.row(i);
    for (std::size_t j = 0; j < shapelets.size(); ++j) row[j] = subsequence_distance(shapelets[j].values, data.series(i));
  });
  return X;
}

StcModel stc_fit(const Dataset& train, const StcConfig& config) {
  if (config.forest_trees == 0) throw Error(ErrorCode::InvalidConfig, "forest_trees must be positive");
  StcModel model;
  model.shapelets = random_shapelet_search(train, config, &model.candidates_evaluated);
  model.class_labels = train.class_labels();
  model.series_length = train.series_length();
  const auto X = shapelet_transform(model.shapelets, train);
  TreeConfig tree_config;
  tree_config.seed = derive_seed(config.seed, 0x5743);
  model.forest = fit_random_forest(X, train.class_indices(), train.n_classes(), config.forest_trees, tree_config);
  return model;
}

std::vector<std::vector<double>> stc_predict_proba(const StcModel& model, const Dataset& test) {
  if (test.series_length() != model.series_length) {
    throw Error(ErrorCode::LengthMismatch, "test length differs from training length");
  }
  const auto X = shapelet_transform(model.shapelets, test);
  std::vector<std::vector<double>> out(test.size());
  for (std::size_t i = 0; i < test.size(); ++i) out[i] = model.forest.predict_proba(X.row(i));
  return out;
}

}  // namespace tsc
