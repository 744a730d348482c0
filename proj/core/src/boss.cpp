#include "tsc/boss.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>

#include "tsc/error.hpp"
#include "tsc/parallel.hpp"
#include "tsc/random.hpp"
#include "tsc/stats.hpp"

namespace tsc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate(const SfaParams& params) {
  if (params.window_length == 0 || params.word_length == 0 || params.alphabet_size < 2) {
    throw Error(ErrorCode::InvalidConfig, "SFA window, word length and alphabet must be positive");
  }
  if (params.word_length > params.window_length) {
    throw Error(ErrorCode::InvalidConfig, "SFA word length exceeds window length");
  }
  if (std::pow(static_cast<double>(params.alphabet_size), static_cast<double>(params.word_length)) > 1.8e19) {
    throw Error(ErrorCode::InvalidConfig, "SFA words do not fit in 64 bits");
  }
}

// Cos/sin tables for one window length, shared by every window of a series.
class Twiddles {
 public:
  explicit Twiddles(std::size_t n) : n_(n), cos_(n), sin_(n) {
    for (std::size_t t = 0; t < n; ++t) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n);
      cos_[t] = std::cos(angle);
      sin_[t] = std::sin(angle);
    }
  }

  void coefficients(std::span<const double> window, const SfaParams& params, std::span<double> out) const {
    std::vector<double> z;
    std::span<const double> x = window;
    if (params.normalize) {
      z = znormalize(window);
      x = z;
    }
    std::size_t k = params.normalize ? 1 : 0;
    std::size_t filled = 0;
    while (filled < params.word_length) {
      double re = 0.0;
      double im = 0.0;
      std::size_t idx = 0;
      for (std::size_t t = 0; t < n_; ++t) {
        re += x[t] * cos_[idx];
        im -= x[t] * sin_[idx];
        idx = (idx + k) % n_;
      }
      out[filled++] = re;
      if (filled < params.word_length) out[filled++] = im;
      ++k;
    }
  }

 private:
  std::size_t n_;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

void require_window_fits(std::size_t series_length, const SfaParams& params) {
  if (params.window_length > series_length) {
    throw Error(ErrorCode::WindowTooLong, "window " + std::to_string(params.window_length) +
                                              " exceeds series length " + std::to_string(series_length));
  }
}

std::uint64_t pack_word(std::span<const double> coefficients, const SfaParams& params,
                        const Breakpoints& breakpoints) {
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < params.word_length; ++i) {
    word = word * params.alphabet_size + sfa_symbol(coefficients[i], breakpoints.per_coefficient[i]);
  }
  return word;
}

void require_fitted(const Breakpoints& breakpoints, const SfaParams& params) {
  if (breakpoints.per_coefficient.size() != params.word_length) {
    throw Error(ErrorCode::UnfittedBreakpoints, "breakpoints do not match the word length");
  }
  for (const auto& b : breakpoints.per_coefficient) {
    if (b.size() != params.alphabet_size - 1) {
      throw Error(ErrorCode::UnfittedBreakpoints, "breakpoints do not match the alphabet size");
    }
  }
}

// Linear-interpolated quantile of sorted values, q in [0, 1].
double quantile(std::span<const double> sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

}  // namespace

std::uint32_t WordHistogram::count(std::uint64_t word) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), word,
                             [](const auto& e, std::uint64_t w) { return e.first < w; });
  return it != entries.end() && it->first == word ? it->second : 0;
}

std::size_t WordHistogram::total() const {
  std::size_t sum = 0;
  for (const auto& e : entries) sum += e.second;
  return sum;
}

std::vector<double> sfa_coefficients(std::span<const double> window, const SfaParams& params) {
  validate(params);
  if (window.size() != params.window_length) {
    throw Error(ErrorCode::LengthMismatch, "window length differs from SFA window_length");
  }
  std::vector<double> out(params.word_length);
  Twiddles{params.window_length}.coefficients(window, params, out);
  return out;
}

std::size_t sfa_symbol(double value, std::span<const double> thresholds) {
  std::size_t symbol = 0;
  for (double b : thresholds) {
    if (value > b) ++symbol;
  }
  return symbol;
}

std::uint64_t sfa_word(std::span<const double> window, const SfaParams& params, const Breakpoints& breakpoints) {
  require_fitted(breakpoints, params);
  const auto coefficients = sfa_coefficients(window, params);
  return pack_word(coefficients, params, breakpoints);
}

Breakpoints fit_breakpoints(const Dataset& train, const SfaParams& params) {
  validate(params);
  require_window_fits(train.series_length(), params);
  if (train.empty()) throw Error(ErrorCode::EmptyTrainingSet, "cannot fit breakpoints without data");

  const std::size_t n_windows = train.series_length() - params.window_length + 1;
  const Twiddles twiddles{params.window_length};
  std::vector<std::vector<double>> pooled(params.word_length);
  for (auto& p : pooled) p.reserve(train.size() * n_windows);
  std::vector<double> coefficients(params.word_length);
  for (std::size_t i = 0; i < train.size(); ++i) {
    const auto series = train.series(i);
    for (std::size_t s = 0; s < n_windows; ++s) {
      twiddles.coefficients(series.subspan(s, params.window_length), params, coefficients);
      for (std::size_t c = 0; c < params.word_length; ++c) pooled[c].push_back(coefficients[c]);
    }
  }

  Breakpoints out;
  out.per_coefficient.resize(params.word_length);
  for (std::size_t c = 0; c < params.word_length; ++c) {
    auto& values = pooled[c];
    std::sort(values.begin(), values.end());
    auto& thresholds = out.per_coefficient[c];
    for (std::size_t q = 1; q < params.alphabet_size; ++q) {
      double b = quantile(values, static_cast<double>(q) / static_cast<double>(params.alphabet_size));
      if (!thresholds.empty() && b <= thresholds.back()) b = std::nextafter(thresholds.back(), kInf);
      thresholds.push_back(b);
    }
  }
  return out;
}

WordHistogram series_to_histogram(std::span<const double> series, const SfaParams& params,
                                  const Breakpoints& breakpoints) {
  validate(params);
  require_window_fits(series.size(), params);
  require_fitted(breakpoints, params);
  const std::size_t n_windows = series.size() - params.window_length + 1;
  const Twiddles twiddles{params.window_length};
  std::vector<double> coefficients(params.word_length);
  std::vector<std::uint64_t> words;
  words.reserve(n_windows);
  for (std::size_t s = 0; s < n_windows; ++s) {
    twiddles.coefficients(series.subspan(s, params.window_length), params, coefficients);
    const auto word = pack_word(coefficients, params, breakpoints);
    if (!words.empty() && word == words.back()) continue;
    words.push_back(word);
  }
  std::sort(words.begin(), words.end());
  WordHistogram hist;
  for (auto w : words) {
    if (!hist.entries.empty() && hist.entries.back().first == w) {
      ++hist.entries.back().second;
    } else {
      hist.entries.emplace_back(w, 1);
    }
  }
  return hist;
}

double boss_distance(const WordHistogram& a, const WordHistogram& b, double cutoff) {
  double acc = 0.0;
  auto jt = b.entries.begin();
  for (const auto& [word, count] : a.entries) {
    while (jt != b.entries.end() && jt->first < word) ++jt;
    const double other = (jt != b.entries.end() && jt->first == word) ? static_cast<double>(jt->second) : 0.0;
    const double d = static_cast<double>(count) - other;
    acc += d * d;
    if (acc > cutoff) return kInf;
  }
  return acc;
}

std::size_t BossIndividualModel::classify(const WordHistogram& query) const {
  double best = kInf;
  std::size_t best_index = 0;
  for (std::size_t j = 0; j < train_histograms.size(); ++j) {
    const double d = boss_distance(query, train_histograms[j], best);
    if (d < best) {
      best = d;
      best_index = j;
    }
  }
  return train_labels.at(best_index);
}

double loo_accuracy(std::span<const WordHistogram> histograms, std::span<const std::size_t> labels) {
  const std::size_t n = histograms.size();
  if (n < 2) return 0.0;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double best = kInf;
    std::size_t best_index = i == 0 ? 1 : 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = boss_distance(histograms[i], histograms[j], best);
      if (d < best) {
        best = d;
        best_index = j;
      }
    }
    if (labels[best_index] == labels[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(n);
}

BossIndividualModel boss_individual_fit(const Dataset& train, const SfaParams& params) {
  BossIndividualModel model;
  model.params = params;
  model.breakpoints = fit_breakpoints(train, params);
  model.train_histograms.reserve(train.size());
  for (std::size_t i = 0; i < train.size(); ++i) {
    model.train_histograms.push_back(series_to_histogram(train.series(i), params, model.breakpoints));
  }
  model.train_labels = train.class_indices();
  model.train_accuracy = loo_accuracy(model.train_histograms, model.train_labels);
  return model;
}

std::vector<std::size_t> retain_by_accuracy(std::span<const double> accuracies, double threshold) {
  if (accuracies.empty()) return {};
  const double best = *std::max_element(accuracies.begin(), accuracies.end());
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < accuracies.size(); ++i) {
    if (accuracies[i] + 1e-12 >= threshold * best) kept.push_back(i);
  }
  return kept;
}

std::vector<SfaParams> boss_parameter_space(std::size_t series_length) {
  constexpr std::size_t kMinWindow = 10;
  if (series_length < kMinWindow) {
    throw Error(ErrorCode::NoViableParameters,
                "series length " + std::to_string(series_length) + " is below the minimum window of 10");
  }
  std::vector<std::size_t> windows;
  for (std::size_t k = 0; k < 10; ++k) {
    const double w = static_cast<double>(kMinWindow) +
                     static_cast<double>(k) * static_cast<double>(series_length - kMinWindow) / 9.0;
    const auto rounded = static_cast<std::size_t>(std::lround(w));
    if (windows.empty() || windows.back() != rounded) windows.push_back(rounded);
  }
  std::vector<SfaParams> space;
  for (bool normalize : {true, false}) {
    for (auto window : windows) {
      for (std::size_t word : {16, 14, 12, 10, 8}) {
        if (word <= window) space.push_back({window, word, 4, normalize});
      }
    }
  }
  return space;
}

BossEnsembleModel boss_ensemble_fit(const Dataset& train, const BossEnsembleConfig& config) {
  if (train.empty()) throw Error(ErrorCode::EmptyTrainingSet, "training set is empty");
  if (!(config.retention_threshold > 0.0 && config.retention_threshold <= 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "retention threshold must lie in (0, 1]");
  }
  const auto space = boss_parameter_space(train.series_length());

  BossEnsembleModel model;
  model.class_labels = train.class_labels();
  model.series_length = train.series_length();

  if (!config.randomised_ensemble) {
    std::vector<BossIndividualModel> candidates(space.size());
    parallel_for(space.size(), [&](std::size_t i) { candidates[i] = boss_individual_fit(train, space[i]); });
    std::vector<double> accuracies;
    for (const auto& c : candidates) accuracies.push_back(c.train_accuracy);
    for (auto i : retain_by_accuracy(accuracies, config.retention_threshold)) {
      model.members.push_back(std::move(candidates[i]));
    }
    model.parameters_evaluated = space.size();
    return model;
  }

  if (config.max_ensemble_size == 0) throw Error(ErrorCode::InvalidConfig, "max_ensemble_size must be positive");
  model.accuracy_weighted = true;
  Rng rng{derive_seed(config.seed, 0)};
  std::vector<std::size_t> order(space.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[uniform_index(rng, 0, i - 1)]);

  const auto start = std::chrono::steady_clock::now();
  const bool contracted = config.time_limit_minutes.has_value();
  const auto budget = std::chrono::duration<double, std::ratio<60>>(contracted ? *config.time_limit_minutes : 0.0);
  const std::size_t limit = contracted ? order.size() : std::min(config.n_parameter_samples, order.size());

  // Kept sorted by accuracy descending; equal accuracies keep sampling order.
  std::vector<BossIndividualModel> kept;
  std::size_t evaluated = 0;
  for (std::size_t s = 0; s < limit; ++s) {
    if (contracted && evaluated > 0 && std::chrono::steady_clock::now() - start >= budget) break;
    auto individual = boss_individual_fit(train, space[order[s]]);
    ++evaluated;
    auto pos = std::upper_bound(kept.begin(), kept.end(), individual.train_accuracy,
                                [](double acc, const BossIndividualModel& m) { return acc > m.train_accuracy; });
    if (static_cast<std::size_t>(pos - kept.begin()) >= config.max_ensemble_size) continue;
    kept.insert(pos, std::move(individual));
    if (kept.size() > config.max_ensemble_size) kept.pop_back();
  }
  model.members = std::move(kept);
  model.parameters_evaluated = evaluated;
  return model;
}

std::vector<std::vector<double>> boss_predict_proba(const BossEnsembleModel& model, const Dataset& test) {
  if (test.series_length() != model.series_length) {
    throw Error(ErrorCode::LengthMismatch, "test length differs from training length");
  }
  const std::size_t n_classes = model.class_labels.size();
  std::vector<double> weights;
  double total_weight = 0.0;
  for (const auto& m : model.members) {
    weights.push_back(model.accuracy_weighted ? std::pow(m.train_accuracy, 4.0) : 1.0);
    total_weight += weights.back();
  }
  // Every member scoring zero would leave no votes; fall back to equal weights.
  if (total_weight <= 0.0) std::fill(weights.begin(), weights.end(), 1.0);

  std::vector<std::vector<double>> out(test.size(), std::vector<double>(n_classes, 0.0));
  for (std::size_t m = 0; m < model.members.size(); ++m) {
    const auto& member = model.members[m];
    for (std::size_t i = 0; i < test.size(); ++i) {
      const auto hist = series_to_histogram(test.series(i), member.params, member.breakpoints);
      out[i][member.classify(hist)] += weights[m];
    }
  }
  for (auto& p : out) {
    const double sum = std::accumulate(p.begin(), p.end(), 0.0);
    for (auto& v : p) v /= sum;
  }
  return out;
}

}  // namespace tsc
