#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace tsc {

/// Dense row-major feature matrix.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  [[nodiscard]] std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

enum class SplitCriterion { Gini, Entropy };

struct MaxFeatures {
  enum class Kind { All, Sqrt, Count } kind = Kind::All;
  std::size_t count = 0;

  static MaxFeatures all() { return {Kind::All, 0}; }
  static MaxFeatures sqrt() { return {Kind::Sqrt, 0}; }
  static MaxFeatures exactly(std::size_t n) { return {Kind::Count, n}; }
  [[nodiscard]] std::size_t resolve(std::size_t n_features) const;
};

struct TreeConfig {
  SplitCriterion split_criterion = SplitCriterion::Gini;
  MaxFeatures max_features = MaxFeatures::all();
  std::size_t min_leaf_size = 1;
  std::uint64_t seed = 0;
};

/// Fitted CART-style classification tree stored as a flat node array; node 0
/// is the root.
class DecisionTree {
 public:
  struct Internal {
    std::size_t feature_index;
    double threshold;
    std::size_t left;
    std::size_t right;
  };
  struct Leaf {
    std::vector<double> class_distribution;
  };
  using Node = std::variant<Internal, Leaf>;

  DecisionTree() = default;
  DecisionTree(std::vector<Node> nodes, std::size_t n_features, std::size_t n_classes)
      : nodes_(std::move(nodes)), n_features_(n_features), n_classes_(n_classes) {}

  /// Leaf distribution reached by x (left when value <= threshold).
  /// Throws DimensionMismatch when x has the wrong width.
  [[nodiscard]] const std::vector<double>& predict_proba(std::span<const double> x) const;

  [[nodiscard]] const std::vector<Node>& nodes() const noexcept { return nodes_; }
  [[nodiscard]] std::size_t n_features() const noexcept { return n_features_; }
  [[nodiscard]] std::size_t n_classes() const noexcept { return n_classes_; }
  [[nodiscard]] std::size_t depth() const;

 private:
  std::vector<Node> nodes_;
  std::size_t n_features_ = 0;
  std::size_t n_classes_ = 0;
};

/// Unpruned tree. y holds class indices in [0, n_classes).
DecisionTree fit_decision_tree(const FeatureMatrix& X, std::span<const std::size_t> y, std::size_t n_classes,
                               const TreeConfig& config);

struct ForestModel {
  std::vector<DecisionTree> trees;
  std::size_t n_classes = 0;

  [[nodiscard]] std::vector<double> predict_proba(std::span<const double> x) const;
};

/// Bagged forest: tree i is grown on a bootstrap sample using
/// max_features = sqrt and a generator seeded from (config.seed, i).
ForestModel fit_random_forest(const FeatureMatrix& X, std::span<const std::size_t> y, std::size_t n_classes,
                              std::size_t n_trees, const TreeConfig& config);

enum class VoteMode { Average, Majority };

/// Combines per-member probability vectors for one case. Majority mode counts
/// each member's argmax (lowest index on ties) and normalises the counts.
std::vector<double> ensemble_predict_proba(std::span<const std::vector<double>> members, VoteMode mode);

/// Index of the largest entry, lowest index on ties.
std::size_t argmax(std::span<const double> v);

}  // namespace tsc
