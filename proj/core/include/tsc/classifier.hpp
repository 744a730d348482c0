#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsc/dataset.hpp"

namespace tsc {

/// Flag overrides shared by every classifier; unset fields keep the
/// classifier's defaults and fields a classifier does not use are ignored.
struct ClassifierOptions {
  std::optional<double> contract_minutes;
  std::optional<std::size_t> n_trees;
  std::optional<std::size_t> n_parameter_samples;
  std::optional<std::size_t> max_ensemble_size;
  std::optional<std::size_t> max_candidates;
  std::optional<std::size_t> forest_trees;
  std::optional<std::size_t> n_stump_evaluations;
  std::optional<double> proportion_of_param_options;
  std::optional<double> proportion_of_train_in_param_finding;
  std::optional<std::string> distance_params;  // nn-*: "k=v[,k=v]"
};

class Classifier {
 public:
  virtual ~Classifier() = default;

  virtual void fit(const Dataset& train) = 0;
  /// One distribution per test case. Throws if called before fit.
  [[nodiscard]] virtual std::vector<std::vector<double>> predict_proba(const Dataset& test) const = 0;
  /// Configuration, plus fitted choices once fit (e.g. tuned parameters).
  [[nodiscard]] virtual std::string parameter_text() const = 0;
  [[nodiscard]] virtual std::string_view name() const = 0;
};

/// tsf, rise, tsf-composed, rise-composed, boss, cboss, stc, ee, pf and
/// nn-<measure> for every distance measure.
const std::vector<std::string>& classifier_names();

/// Throws UnknownClassifier, InvalidConfig.
std::unique_ptr<Classifier> make_classifier(std::string_view name, const ClassifierOptions& options,
                                            std::uint64_t seed);

}  // namespace tsc
