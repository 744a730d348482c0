#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace tsc {

struct WinDrawLoss {
  std::size_t wins = 0;
  std::size_t draws = 0;
  std::size_t losses = 0;

  friend bool operator==(const WinDrawLoss&, const WinDrawLoss&) = default;
};

/// Counts a > b, |a - b| <= tolerance, a < b. Throws DimensionMismatch.
WinDrawLoss win_draw_loss(std::span<const double> a, std::span<const double> b, double tolerance = 1e-10);

/// Two-sided Wilcoxon signed-rank p-value. Zero differences are dropped and
/// tied magnitudes midranked. Up to 25 differences the exact permutation
/// distribution of the (midranked) statistic is used, above that the normal
/// approximation with tie and continuity corrections. Throws TooFewSamples
/// below 5 non-zero differences, DimensionMismatch.
double wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b);

/// Holm step-down: reject[i] in input order.
std::vector<bool> holm_correct(std::span<const double> p_values, double alpha);

/// Holm-adjusted p-values, input order, capped at 1.
std::vector<double> holm_adjust(std::span<const double> p_values);

/// Per-row ranks, 1 = best, ties midranked.
std::vector<double> rank_row(std::span<const double> values, bool higher_is_better);

/// Rows are datasets, columns classifiers.
using MetricMatrix = std::vector<std::vector<double>>;

struct PairComparison {
  std::size_t a = 0;
  std::size_t b = 0;
  double p_value = 1.0;     // 1 when too few non-zero differences
  double adjusted_p = 1.0;  // Holm
  bool significant = false;
  WinDrawLoss wdl;          // from a's side, on raw metric values
};

struct ComparisonSummary {
  std::vector<double> average_ranks;
  std::vector<PairComparison> pairs;  // (0,1), (0,2), ..., (k-2,k-1)
  /// Maximal sets of classifiers with no significant pair, each ascending,
  /// listed lexicographically.
  std::vector<std::vector<std::size_t>> cliques;
};

/// Throws TooFewSamples (fewer than 2 classifiers or 5 datasets),
/// DimensionMismatch (ragged matrix).
ComparisonSummary average_ranks_and_cliques(const MetricMatrix& matrix, double alpha, bool higher_is_better = true);

/// Maximal cliques of an undirected graph given as an adjacency matrix.
std::vector<std::vector<std::size_t>> maximal_cliques(const std::vector<std::vector<bool>>& adjacent);

}  // namespace tsc
