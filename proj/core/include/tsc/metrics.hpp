#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "tsc/results.hpp"

namespace tsc {

struct MetricSet {
  double accuracy = 0.0;
  double balanced_accuracy = 0.0;
  double auc = 0.0;
  double nll = 0.0;  // bits
};

enum class Metric { Accuracy, BalancedAccuracy, Auc, Nll };

/// "acc", "balacc", "auc", "nll". Throws InvalidConfig.
Metric parse_metric(std::string_view name);
std::string_view to_string(Metric m) noexcept;
bool higher_is_better(Metric m) noexcept;
double metric_value(const MetricSet& set, Metric m) noexcept;

/// Area under the ROC curve of `scores` for cases whose label equals
/// `positive`, tied scores midranked. Throws DegenerateLabels unless both
/// groups are present.
double binary_auc(std::span<const double> scores, std::span<const std::size_t> labels, std::size_t positive);

/// Balanced accuracy averages recall over classes present in the test set.
/// AUC is the one-vs-rest average weighted by class frequency over classes
/// with both positives and negatives (1 when there are none). NLL is
/// -mean log2(max(p_true, 1e-6)). Throws EmptyResults.
MetricSet compute_metrics(const ClassifierResults& results, std::size_t n_classes);

}  // namespace tsc
