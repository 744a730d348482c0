#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tsc/dataset.hpp"
#include "tsc/distances.hpp"
#include "tsc/random.hpp"

namespace tsc {

struct PfConfig {
  std::size_t n_trees = 100;
  std::size_t n_stump_evaluations = 5;
  std::uint64_t seed = 0;
};

/// Flat node storage; node 0 is the root. Children are listed in exemplar
/// order, which is ascending class index.
struct PfNode {
  struct Internal {
    DistanceSpec spec;
    std::vector<std::vector<double>> exemplars;  // raw values
    std::vector<std::size_t> exemplar_classes;
    std::vector<std::size_t> children;
  };
  struct Leaf {
    std::vector<double> class_distribution;
  };
  std::variant<Internal, Leaf> content;
};

struct PfTree {
  std::vector<PfNode> nodes;

  /// Leaf distribution reached by routing `series` to the nearest exemplar at
  /// each internal node, ties to the lowest class.
  [[nodiscard]] const std::vector<double>& route(std::span<const double> series) const;
};

struct PfModel {
  std::vector<PfTree> trees;
  std::vector<std::string> class_labels;
  std::size_t series_length = 0;
};

struct PfSplit {
  DistanceSpec spec;
  std::vector<std::size_t> exemplar_rows;  // one per present class, ascending class
  std::vector<std::size_t> exemplar_classes;
  std::vector<std::vector<std::size_t>> branches;  // rows per exemplar
};

/// Draws an exemplar per class present among `rows`, a constituent uniformly
/// from the elastic ensemble set with parameters drawn from its ranges, and
/// partitions the rows by nearest exemplar. Throws SingleClassNode.
PfSplit pf_generate_candidate_split(const Dataset& train, std::span<const std::size_t> rows,
                                    const GridContext& context, Rng& rng);

/// Uniform draw from the tuning ranges of `measure`. Euclidean has none.
DistanceParams pf_sample_params(Measure measure, const GridContext& context, Rng& rng);

/// Weighted Gini impurity of child class counts; lower is better.
double pf_gini_score(std::span<const std::vector<std::size_t>> child_class_counts);

PfTree pf_fit_tree(const Dataset& train, std::size_t n_stump_evaluations, Rng& rng);

PfModel pf_fit(const Dataset& train, const PfConfig& config);

/// Majority vote over trees.
std::vector<std::vector<double>> pf_predict_proba(const PfModel& model, const Dataset& test);

}  // namespace tsc
