#include "tsc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tsc/error.hpp"

namespace tsc {

Metric parse_metric(std::string_view name) {
  if (name == "acc") return Metric::Accuracy;
  if (name == "balacc") return Metric::BalancedAccuracy;
  if (name == "auc") return Metric::Auc;
  if (name == "nll") return Metric::Nll;
  throw Error(ErrorCode::InvalidConfig, "unknown metric '" + std::string(name) + "'");
}

std::string_view to_string(Metric m) noexcept {
  switch (m) {
    case Metric::Accuracy: return "acc";
    case Metric::BalancedAccuracy: return "balacc";
    case Metric::Auc: return "auc";
    case Metric::Nll: return "nll";
  }
  return "?";
}

bool higher_is_better(Metric m) noexcept { return m != Metric::Nll; }

double metric_value(const MetricSet& set, Metric m) noexcept {
  switch (m) {
    case Metric::Accuracy: return set.accuracy;
    case Metric::BalancedAccuracy: return set.balanced_accuracy;
    case Metric::Auc: return set.auc;
    case Metric::Nll: return set.nll;
  }
  return 0.0;
}

double binary_auc(std::span<const double> scores, std::span<const std::size_t> labels, std::size_t positive) {
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return scores[a] < scores[b]; });

  double rank_sum = 0.0;
  double n_pos = 0.0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) ++j;
    const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (labels[order[k]] == positive) {
        rank_sum += midrank;
        n_pos += 1.0;
      }
    }
    i = j;
  }
  const double n_neg = static_cast<double>(n) - n_pos;
  if (n_pos == 0.0 || n_neg == 0.0) throw Error(ErrorCode::DegenerateLabels, "AUC needs both groups");
  return (rank_sum - n_pos * (n_pos + 1.0) / 2.0) / (n_pos * n_neg);
}

MetricSet compute_metrics(const ClassifierResults& r, std::size_t n_classes) {
  const std::size_t n = r.size();
  if (n == 0) throw Error(ErrorCode::EmptyResults, "no predictions");
  if (r.predicted_class.size() != n || r.probabilities.size() != n) {
    throw Error(ErrorCode::MalformedResults, "prediction columns differ in length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (r.true_class[i] >= n_classes || r.predicted_class[i] >= n_classes || r.probabilities[i].size() != n_classes) {
      throw Error(ErrorCode::MalformedResults, "class index or probability width out of range");
    }
  }

  MetricSet m;
  m.accuracy = r.accuracy();

  std::vector<double> support(n_classes, 0.0);
  std::vector<double> hits(n_classes, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    support[r.true_class[i]] += 1.0;
    if (r.predicted_class[i] == r.true_class[i]) hits[r.true_class[i]] += 1.0;
  }
  double recall_sum = 0.0;
  double present = 0.0;
  for (std::size_t c = 0; c < n_classes; ++c) {
    if (support[c] == 0.0) continue;
    recall_sum += hits[c] / support[c];
    present += 1.0;
  }
  m.balanced_accuracy = recall_sum / present;

  double weighted = 0.0;
  double weight = 0.0;
  std::vector<double> scores(n);
  for (std::size_t c = 0; c < n_classes; ++c) {
    if (support[c] == 0.0 || support[c] == static_cast<double>(n)) continue;
    for (std::size_t i = 0; i < n; ++i) scores[i] = r.probabilities[i][c];
    weighted += support[c] * binary_auc(scores, r.true_class, c);
    weight += support[c];
  }
  m.auc = weight > 0.0 ? weighted / weight : 1.0;

  double nll = 0.0;
  for (std::size_t i = 0; i < n; ++i) nll -= std::log2(std::max(r.probabilities[i][r.true_class[i]], 1e-6));
  m.nll = nll / static_cast<double>(n);
  return m;
}

}  // namespace tsc
