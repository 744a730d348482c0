#include "tsc/tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "tsc/error.hpp"
#include "tsc/parallel.hpp"
#include "tsc/random.hpp"

namespace tsc {

std::size_t MaxFeatures::resolve(std::size_t n_features) const {
  switch (kind) {
    case Kind::All: return n_features;
    case Kind::Sqrt:
      return std::clamp<std::size_t>(
          static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n_features)))), 1, n_features);
    case Kind::Count: return std::clamp<std::size_t>(count, 1, n_features);
  }
  return n_features;
}

std::size_t argmax(std::span<const double> v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

namespace {

double impurity(std::span<const std::size_t> counts, std::size_t total, SplitCriterion criterion) {
  if (total == 0) return 0.0;
  const double n = static_cast<double>(total);
  double acc = 0.0;
  if (criterion == SplitCriterion::Gini) {
    for (auto c : counts) {
      const double p = static_cast<double>(c) / n;
      acc += p * p;
    }
    return 1.0 - acc;
  }
  for (auto c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    acc -= p * std::log2(p);
  }
  return acc;
}

class TreeBuilder {
 public:
  TreeBuilder(const FeatureMatrix& X, std::span<const std::size_t> y, std::size_t n_classes, const TreeConfig& config)
      : X_(X), y_(y), n_classes_(n_classes), config_(config), rng_(config.seed) {
    n_candidate_features_ = config.max_features.resolve(X.cols());
  }

  DecisionTree build(std::vector<std::size_t> rows) {
    grow(std::move(rows));
    return DecisionTree{std::move(nodes_), X_.cols(), n_classes_};
  }

 private:
  struct Split {
    bool found = false;
    double gain = -std::numeric_limits<double>::infinity();
    std::size_t feature = 0;
    double threshold = 0.0;
  };

  std::size_t make_leaf(std::span<const std::size_t> counts, std::size_t total) {
    std::vector<double> dist(n_classes_, 0.0);
    for (std::size_t c = 0; c < n_classes_; ++c) dist[c] = static_cast<double>(counts[c]) / static_cast<double>(total);
    nodes_.emplace_back(DecisionTree::Leaf{std::move(dist)});
    return nodes_.size() - 1;
  }

  std::size_t grow(std::vector<std::size_t> rows) {
    std::vector<std::size_t> counts(n_classes_, 0);
    for (auto r : rows) ++counts[y_[r]];
    const std::size_t total = rows.size();
    const bool pure = std::count_if(counts.begin(), counts.end(), [](auto c) { return c > 0; }) <= 1;
    if (pure || total < 2 * config_.min_leaf_size) return make_leaf(counts, total);

    const Split split = best_split(rows, counts);
    if (!split.found) return make_leaf(counts, total);

    std::vector<std::size_t> left_rows;
    std::vector<std::size_t> right_rows;
    for (auto r : rows) (X_(r, split.feature) <= split.threshold ? left_rows : right_rows).push_back(r);
    rows.clear();
    rows.shrink_to_fit();

    const std::size_t index = nodes_.size();
    nodes_.emplace_back(DecisionTree::Internal{split.feature, split.threshold, 0, 0});
    const std::size_t left = grow(std::move(left_rows));
    const std::size_t right = grow(std::move(right_rows));
    auto& node = std::get<DecisionTree::Internal>(nodes_[index]);
    node.left = left;
    node.right = right;
    return index;
  }

  // Candidate features are visited in a random order; only features that
  // admit at least one valid threshold count towards max_features. Among the
  // visited features the best gain wins, ties to lowest feature then lowest
  // threshold.
  Split best_split(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& parent_counts) {
    const std::size_t n_features = X_.cols();
    std::vector<std::size_t> order(n_features);
    std::iota(order.begin(), order.end(), 0);
    const bool subsample = n_candidate_features_ < n_features;
    if (subsample) {
      for (std::size_t i = n_features; i > 1; --i) std::swap(order[i - 1], order[uniform_index(rng_, 0, i - 1)]);
    }

    const std::size_t total = rows.size();
    const double parent_impurity = impurity(parent_counts, total, config_.split_criterion);
    Split best;
    std::size_t informative = 0;
    std::vector<std::pair<double, std::size_t>> sorted(total);
    std::vector<std::size_t> left_counts(n_classes_);
    std::vector<std::size_t> right_counts(n_classes_);

    for (std::size_t f : order) {
      if (subsample && informative >= n_candidate_features_) break;
      for (std::size_t i = 0; i < total; ++i) sorted[i] = {X_(rows[i], f), y_[rows[i]]};
      std::sort(sorted.begin(), sorted.end());
      if (sorted.front().first == sorted.back().first) continue;

      bool any_valid = false;
      std::fill(left_counts.begin(), left_counts.end(), 0);
      right_counts = parent_counts;
      for (std::size_t k = 0; k + 1 < total; ++k) {
        ++left_counts[sorted[k].second];
        --right_counts[sorted[k].second];
        const double lo = sorted[k].first;
        const double hi = sorted[k + 1].first;
        if (lo == hi) continue;
        const std::size_t n_left = k + 1;
        const std::size_t n_right = total - n_left;
        if (n_left < config_.min_leaf_size || n_right < config_.min_leaf_size) continue;
        any_valid = true;
        double threshold = lo + (hi - lo) / 2.0;
        if (threshold >= hi) threshold = lo;
        const double gain = parent_impurity -
                            (static_cast<double>(n_left) / static_cast<double>(total)) *
                                impurity(left_counts, n_left, config_.split_criterion) -
                            (static_cast<double>(n_right) / static_cast<double>(total)) *
                                impurity(right_counts, n_right, config_.split_criterion);
        const bool better = !best.found || gain > best.gain ||
                            (gain == best.gain && (f < best.feature || (f == best.feature && threshold < best.threshold)));
        if (better) best = {true, gain, f, threshold};
      }
      if (any_valid) ++informative;
    }
    return best;
  }

  const FeatureMatrix& X_;
  std::span<const std::size_t> y_;
  std::size_t n_classes_;
  TreeConfig config_;
  Rng rng_;
  std::size_t n_candidate_features_ = 0;
  std::vector<DecisionTree::Node> nodes_;
};

void validate_training_input(const FeatureMatrix& X, std::span<const std::size_t> y, std::size_t n_classes) {
  if (X.rows() == 0 || y.empty()) throw Error(ErrorCode::EmptyTrainingSet, "no training rows");
  if (X.rows() != y.size()) throw Error(ErrorCode::DimensionMismatch, "feature rows and labels differ in count");
  if (n_classes == 0) throw Error(ErrorCode::InvalidConfig, "n_classes must be positive");
  for (auto label : y) {
    if (label >= n_classes) throw Error(ErrorCode::InvalidConfig, "class index out of range");
  }
  for (std::size_t r = 0; r < X.rows(); ++r) {
    for (double v : X.row(r)) {
      if (!std::isfinite(v)) throw Error(ErrorCode::InvalidConfig, "non-finite feature value");
    }
  }
}

}  // namespace

const std::vector<double>& DecisionTree::predict_proba(std::span<const double> x) const {
  if (x.size() != n_features_) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(n_features_) + " features, got " + std::to_string(x.size()));
  }
  std::size_t index = 0;
  for (;;) {
    const auto& node = nodes_[index];
    if (const auto* leaf = std::get_if<Leaf>(&node)) return leaf->class_distribution;
    const auto& internal = std::get<Internal>(node);
    index = x[internal.feature_index] <= internal.threshold ? internal.left : internal.right;
  }
}

std::size_t DecisionTree::depth() const {
  if (nodes_.empty()) return 0;
  std::size_t deepest = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [index, d] = stack.back();
    stack.pop_back();
    deepest = std::max(deepest, d);
    if (const auto* internal = std::get_if<Internal>(&nodes_[index])) {
      stack.emplace_back(internal->left, d + 1);
      stack.emplace_back(internal->right, d + 1);
    }
  }
  return deepest;
}

DecisionTree fit_decision_tree(const FeatureMatrix& X, std::span<const std::size_t> y, std::size_t n_classes,
                               const TreeConfig& config) {
  validate_training_input(X, y, n_classes);
  if (config.min_leaf_size == 0) throw Error(ErrorCode::InvalidConfig, "min_leaf_size must be >= 1");
  std::vector<std::size_t> rows(X.rows());
  std::iota(rows.begin(), rows.end(), 0);
  return TreeBuilder{X, y, n_classes, config}.build(std::move(rows));
}

std::vector<double> ForestModel::predict_proba(std::span<const double> x) const {
  std::vector<double> acc(n_classes, 0.0);
  for (const auto& tree : trees) {
    const auto& p = tree.predict_proba(x);
    for (std::size_t c = 0; c < n_classes; ++c) acc[c] += p[c];
  }
  for (auto& v : acc) v /= static_cast<double>(trees.size());
  return acc;
}

ForestModel fit_random_forest(const FeatureMatrix& X, std::span<const std::size_t> y, std::size_t n_classes,
                              std::size_t n_trees, const TreeConfig& config) {
  validate_training_input(X, y, n_classes);
  if (n_trees == 0) throw Error(ErrorCode::InvalidConfig, "n_trees must be positive");
  ForestModel forest;
  forest.n_classes = n_classes;
  forest.trees.resize(n_trees);
  parallel_for(n_trees, [&](std::size_t i) {
    Rng rng = make_rng(config.seed, i);
    std::vector<std::size_t> rows(X.rows());
    for (auto& r : rows) r = uniform_index(rng, 0, X.rows() - 1);
    TreeConfig tree_config = config;
    tree_config.max_features = MaxFeatures::sqrt();
    tree_config.seed = rng();
    forest.trees[i] = TreeBuilder{X, y, n_classes, tree_config}.build(std::move(rows));
  });
  return forest;
}

std::vector<double> ensemble_predict_proba(std::span<const std::vector<double>> members, VoteMode mode) {
  if (members.empty()) throw Error(ErrorCode::InconsistentDimensions, "no members to combine");
  const std::size_t width = members.front().size();
  for (const auto& m : members) {
    if (m.size() != width) throw Error(ErrorCode::InconsistentDimensions, "member vectors differ in length");
  }
  std::vector<double> out(width, 0.0);
  if (mode == VoteMode::Average) {
    for (const auto& m : members) {
      for (std::size_t c = 0; c < width; ++c) out[c] += m[c];
    }
  } else {
    for (const auto& m : members) out[argmax(m)] += 1.0;
  }
  for (auto& v : out) v /= static_cast<double>(members.size());
  return out;
}

}  // namespace tsc
