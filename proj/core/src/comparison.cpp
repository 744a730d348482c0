#include "tsc/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tsc/error.hpp"

namespace tsc {

namespace {

void require_same_length(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "paired vectors differ in length: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

// Midranks (1-based) of `values` in ascending order.
std::vector<double> midranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return values[x] < values[y]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    const double r = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = r;
    i = j;
  }
  return ranks;
}

void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& r, std::vector<std::size_t> p,
                   std::vector<std::size_t> x, std::vector<std::vector<std::size_t>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  while (!p.empty()) {
    const std::size_t v = p.front();
    std::vector<std::size_t> p2;
    std::vector<std::size_t> x2;
    for (auto u : p) {
      if (adj[v][u]) p2.push_back(u);
    }
    for (auto u : x) {
      if (adj[v][u]) x2.push_back(u);
    }
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(p.begin());
    x.push_back(v);
  }
}

}  // namespace

WinDrawLoss win_draw_loss(std::span<const double> a, std::span<const double> b, double tolerance) {
  require_same_length(a, b);
  WinDrawLoss out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) <= tolerance) {
      ++out.draws;
    } else if (a[i] > b[i]) {
      ++out.wins;
    } else {
      ++out.losses;
    }
  }
  return out;
}

double wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b) {
  require_same_length(a, b);
  std::vector<double> diffs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) diffs.push_back(a[i] - b[i]);
  }
  const std::size_t n = diffs.size();
  if (n < 5) {
    throw Error(ErrorCode::TooFewSamples, std::to_string(n) + " non-zero differences; at least 5 are needed");
  }
  std::vector<double> magnitudes(n);
  for (std::size_t i = 0; i < n; ++i) magnitudes[i] = std::abs(diffs[i]);
  const auto ranks = midranks(magnitudes);
  double t_plus = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (diffs[i] > 0.0) t_plus += ranks[i];
  }
  const double nd = static_cast<double>(n);

  if (n <= 25) {
    // Midranks are multiples of 1/2, so doubled ranks are integers and the
    // null distribution of the doubled statistic is a subset-sum count.
    std::vector<std::size_t> doubled(n);
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      doubled[i] = static_cast<std::size_t>(std::lround(2.0 * ranks[i]));
      total += doubled[i];
    }
    std::vector<double> ways(total + 1, 0.0);
    ways[0] = 1.0;
    std::size_t reach = 0;
    for (auto d : doubled) {
      reach += d;
      for (std::size_t s = reach; s >= d; --s) {
        ways[s] += ways[s - d];
        if (s == d) break;
      }
    }
    const auto observed = static_cast<std::size_t>(std::lround(2.0 * t_plus));
    double lower = 0.0;
    double upper = 0.0;
    for (std::size_t s = 0; s <= total; ++s) {
      if (s <= observed) lower += ways[s];
      if (s >= observed) upper += ways[s];
    }
    const double count = std::ldexp(1.0, static_cast<int>(n));
    return std::min(1.0, 2.0 * std::min(lower, upper) / count);
  }

  const double mean = nd * (nd + 1.0) / 4.0;
  double variance = nd * (nd + 1.0) * (2.0 * nd + 1.0) / 24.0;
  std::vector<double> sorted = ranks;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    variance -= (t * t * t - t) / 48.0;
    i = j;
  }
  const double deviation = t_plus - mean;
  const double corrected = deviation == 0.0 ? 0.0 : std::abs(std::abs(deviation) - 0.5);
  if (variance <= 0.0) return 1.0;
  const double z = corrected / std::sqrt(variance);
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

std::vector<bool> holm_correct(std::span<const double> p_values, double alpha) {
  if (p_values.empty()) throw Error(ErrorCode::EmptyResults, "no p-values to correct");
  const std::size_t m = p_values.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return p_values[x] < p_values[y]; });
  std::vector<bool> reject(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (p_values[order[i]] > alpha / static_cast<double>(m - i)) break;
    reject[order[i]] = true;
  }
  return reject;
}

std::vector<double> holm_adjust(std::span<const double> p_values) {
  const std::size_t m = p_values.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return p_values[x] < p_values[y]; });
  std::vector<double> adjusted(m);
  double running = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    running = std::max(running, std::min(1.0, static_cast<double>(m - i) * p_values[order[i]]));
    adjusted[order[i]] = running;
  }
  return adjusted;
}

std::vector<double> rank_row(std::span<const double> values, bool higher_is_better) {
  std::vector<double> keyed(values.begin(), values.end());
  if (higher_is_better) {
    for (auto& v : keyed) v = -v;
  }
  return midranks(keyed);
}

std::vector<std::vector<std::size_t>> maximal_cliques(const std::vector<std::vector<bool>>& adjacent) {
  std::vector<std::size_t> all(adjacent.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::size_t> r;
  std::vector<std::vector<std::size_t>> out;
  bron_kerbosch(adjacent, r, all, {}, out);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

ComparisonSummary average_ranks_and_cliques(const MetricMatrix& matrix, double alpha, bool higher_is_better) {
  const std::size_t n = matrix.size();
  const std::size_t k = n == 0 ? 0 : matrix.front().size();
  if (k < 2 || n < 5) {
    throw Error(ErrorCode::TooFewSamples, "comparison needs at least 2 classifiers and 5 datasets");
  }
  for (const auto& row : matrix) {
    if (row.size() != k) throw Error(ErrorCode::DimensionMismatch, "metric matrix rows differ in width");
  }

  ComparisonSummary out;
  out.average_ranks.assign(k, 0.0);
  for (const auto& row : matrix) {
    const auto ranks = rank_row(row, higher_is_better);
    for (std::size_t c = 0; c < k; ++c) out.average_ranks[c] += ranks[c];
  }
  for (auto& r : out.average_ranks) r /= static_cast<double>(n);

  std::vector<std::vector<double>> columns(k, std::vector<double>(n));
  for (std::size_t d = 0; d < n; ++d) {
    for (std::size_t c = 0; c < k; ++c) columns[c][d] = matrix[d][c];
  }
  std::vector<double> p_values;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      PairComparison pair;
      pair.a = a;
      pair.b = b;
      try {
        pair.p_value = wilcoxon_signed_rank(columns[a], columns[b]);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TooFewSamples) throw;
        pair.p_value = 1.0;
      }
      pair.wdl = win_draw_loss(columns[a], columns[b]);
      p_values.push_back(pair.p_value);
      out.pairs.push_back(pair);
    }
  }
  const auto reject = holm_correct(p_values, alpha);
  const auto adjusted = holm_adjust(p_values);
  std::vector<std::vector<bool>> compatible(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < out.pairs.size(); ++i) {
    auto& pair = out.pairs[i];
    pair.significant = reject[i];
    pair.adjusted_p = adjusted[i];
    compatible[pair.a][pair.b] = compatible[pair.b][pair.a] = !reject[i];
  }
  out.cliques = maximal_cliques(compatible);
  return out;
}

}  // namespace tsc
