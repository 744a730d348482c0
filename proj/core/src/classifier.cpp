#include "tsc/classifier.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "tsc/boss.hpp"
#include "tsc/distances.hpp"
#include "tsc/elastic_ensemble.hpp"
#include "tsc/error.hpp"
#include "tsc/interval.hpp"
#include "tsc/nearest_neighbour.hpp"
#include "tsc/proximity_forest.hpp"
#include "tsc/shapelet.hpp"

namespace tsc {

namespace {

// Wraps a fit function and a predict function over one model type.
template <typename Model>
class ModelClassifier final : public Classifier {
 public:
  using FitFn = std::function<Model(const Dataset&)>;
  using PredictFn = std::function<std::vector<std::vector<double>>(const Model&, const Dataset&)>;
  using DescribeFn = std::function<std::string(const Model*)>;

  ModelClassifier(std::string name, FitFn fit, PredictFn predict, DescribeFn describe)
      : name_(std::move(name)), fit_(std::move(fit)), predict_(std::move(predict)), describe_(std::move(describe)) {}

  void fit(const Dataset& train) override { model_ = fit_(train); }

  [[nodiscard]] std::vector<std::vector<double>> predict_proba(const Dataset& test) const override {
    if (!model_) throw Error(ErrorCode::InvalidConfig, name_ + " has not been fitted");
    return predict_(*model_, test);
  }

  [[nodiscard]] std::string parameter_text() const override { return describe_(model_ ? &*model_ : nullptr); }
  [[nodiscard]] std::string_view name() const override { return name_; }

 private:
  std::string name_;
  FitFn fit_;
  PredictFn predict_;
  DescribeFn describe_;
  std::optional<Model> model_;
};

template <typename Model>
std::unique_ptr<Classifier> wrap(std::string name, typename ModelClassifier<Model>::FitFn fit,
                                 typename ModelClassifier<Model>::PredictFn predict,
                                 typename ModelClassifier<Model>::DescribeFn describe) {
  return std::make_unique<ModelClassifier<Model>>(std::move(name), std::move(fit), std::move(predict),
                                                  std::move(describe));
}

DistanceParams default_nn_params(Measure m) {
  switch (m) {
    case Measure::Euclidean: return {};
    case Measure::Dtw:
    case Measure::Ddtw: return {.w = 1.0};
    case Measure::Wdtw:
    case Measure::Wddtw: return {.g = 0.05};
    case Measure::Lcss: return {.epsilon = 0.2, .delta = 5};
    case Measure::Erp: return {.w = 1.0, .g = 0.0};
    case Measure::Msm: return {.c = 1.0};
    case Measure::Twed: return {.nu = 0.001, .lambda = 1.0};
  }
  return {};
}

std::unique_ptr<Classifier> make_interval(std::string_view name, const ClassifierOptions& o, std::uint64_t seed) {
  if (name == "tsf" || name == "tsf-composed") {
    TsfConfig config;
    config.n_trees = o.n_trees.value_or(config.n_trees);
    config.seed = seed;
    std::ostringstream text;
    text << "n_trees=" << config.n_trees << ",n_intervals=sqrt,min_interval_length=" << config.min_interval_length
         << ",seed=" << seed;
    auto describe = [t = text.str()](const IntervalForestModel*) { return t; };
    if (name == "tsf") {
      return wrap<IntervalForestModel>(std::string(name), [config](const Dataset& d) { return tsf_fit(d, config); },
                                       interval_predict_proba, describe);
    }
    return wrap<IntervalForestModel>(std::string(name),
                                     [spec = tsf_pipeline_spec(config)](const Dataset& d) { return composed_fit(d, spec); },
                                     interval_predict_proba, describe);
  }
  RiseConfig config;
  config.n_trees = o.n_trees.value_or(config.n_trees);
  config.seed = seed;
  std::ostringstream text;
  text << "n_trees=" << config.n_trees << ",min_interval_length=" << config.min_interval_length
       << ",acf_maxlag=" << config.acf_maxlag << ",seed=" << seed;
  auto describe = [t = text.str()](const IntervalForestModel*) { return t; };
  if (name == "rise") {
    return wrap<IntervalForestModel>(std::string(name), [config](const Dataset& d) { return rise_fit(d, config); },
                                     interval_predict_proba, describe);
  }
  return wrap<IntervalForestModel>(std::string(name),
                                   [spec = rise_pipeline_spec(config)](const Dataset& d) { return composed_fit(d, spec); },
                                   interval_predict_proba, describe);
}

std::unique_ptr<Classifier> make_boss(std::string_view name, const ClassifierOptions& o, std::uint64_t seed) {
  BossEnsembleConfig config;
  config.seed = seed;
  std::ostringstream text;
  if (name == "cboss") {
    config.randomised_ensemble = true;
    config.n_parameter_samples = o.n_parameter_samples.value_or(config.n_parameter_samples);
    config.max_ensemble_size = o.max_ensemble_size.value_or(config.max_ensemble_size);
    config.time_limit_minutes = o.contract_minutes;
    text << "n_parameter_samples=" << config.n_parameter_samples << ",max_ensemble_size=" << config.max_ensemble_size;
    if (config.time_limit_minutes) text << ",time_limit_minutes=" << *config.time_limit_minutes;
    text << ",seed=" << seed;
  } else {
    text << "retention_threshold=" << config.retention_threshold;
  }
  return wrap<BossEnsembleModel>(
      std::string(name), [config](const Dataset& d) { return boss_ensemble_fit(d, config); }, boss_predict_proba,
      [t = text.str()](const BossEnsembleModel* m) {
        return m ? t + ",members=" + std::to_string(m->members.size()) : t;
      });
}

std::unique_ptr<Classifier> make_stc(const ClassifierOptions& o, std::uint64_t seed) {
  StcConfig config;
  config.seed = seed;
  config.forest_trees = o.forest_trees.value_or(config.forest_trees);
  std::ostringstream text;
  if (o.contract_minutes && !o.max_candidates) {
    config.contract_minutes = *o.contract_minutes;
    text << "contract_minutes=" << config.contract_minutes;
  } else {
    // Candidate-count contracts keep experiments reproducible.
    config.max_candidates = o.max_candidates.value_or(2000);
    text << "max_candidates=" << *config.max_candidates;
  }
  text << ",forest_trees=" << config.forest_trees << ",seed=" << seed;
  return wrap<StcModel>(
      "stc", [config](const Dataset& d) { return stc_fit(d, config); }, stc_predict_proba,
      [t = text.str()](const StcModel* m) {
        return m ? t + ",shapelets=" + std::to_string(m->shapelets.size()) : t;
      });
}

std::unique_ptr<Classifier> make_ee(const ClassifierOptions& o, std::uint64_t seed) {
  EeConfig config;
  config.seed = seed;
  config.proportion_of_param_options = o.proportion_of_param_options.value_or(config.proportion_of_param_options);
  config.proportion_of_train_in_param_finding =
      o.proportion_of_train_in_param_finding.value_or(config.proportion_of_train_in_param_finding);
  std::ostringstream text;
  text << "proportion_of_param_options=" << config.proportion_of_param_options
       << ",proportion_of_train_in_param_finding=" << config.proportion_of_train_in_param_finding << ",seed=" << seed;
  return wrap<EeModel>(
      "ee", [config](const Dataset& d) { return ee_fit(d, config); }, ee_predict_proba,
      [t = text.str()](const EeModel* m) {
        if (!m) return t;
        std::string out = t;
        for (const auto& member : m->members) {
          out += ";" + member.name + ":" + member.nn.spec.params_text();
        }
        return out;
      });
}

std::unique_ptr<Classifier> make_pf(const ClassifierOptions& o, std::uint64_t seed) {
  PfConfig config;
  config.seed = seed;
  config.n_trees = o.n_trees.value_or(config.n_trees);
  config.n_stump_evaluations = o.n_stump_evaluations.value_or(config.n_stump_evaluations);
  std::ostringstream text;
  text << "n_trees=" << config.n_trees << ",n_stump_evaluations=" << config.n_stump_evaluations << ",seed=" << seed;
  return wrap<PfModel>(
      "pf", [config](const Dataset& d) { return pf_fit(d, config); }, pf_predict_proba,
      [t = text.str()](const PfModel*) { return t; });
}

std::unique_ptr<Classifier> make_nn(std::string_view name, const ClassifierOptions& o) {
  const Measure measure = parse_measure(name.substr(3));
  DistanceSpec spec = o.distance_params ? parse_distance_spec(measure, *o.distance_params)
                                        : DistanceSpec{measure, default_nn_params(measure)};
  spec.validate();
  return wrap<NnModel>(
      std::string(name), [spec](const Dataset& d) { return nn_fit(d, spec); }, nn_predict_proba,
      [t = spec.params_text()](const NnModel*) { return t; });
}

}  // namespace

const std::vector<std::string>& classifier_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out = {"tsf", "rise", "tsf-composed", "rise-composed", "boss", "cboss", "stc", "ee", "pf"};
    for (auto m : {Measure::Euclidean, Measure::Dtw, Measure::Ddtw, Measure::Wdtw, Measure::Wddtw, Measure::Lcss,
                   Measure::Erp, Measure::Msm, Measure::Twed}) {
      out.push_back("nn-" + std::string(to_string(m)));
    }
    return out;
  }();
  return names;
}

std::unique_ptr<Classifier> make_classifier(std::string_view name, const ClassifierOptions& options,
                                            std::uint64_t seed) {
  const auto& names = classifier_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw Error(ErrorCode::UnknownClassifier, "unknown classifier '" + std::string(name) + "'");
  }
  if (name == "tsf" || name == "rise" || name == "tsf-composed" || name == "rise-composed") {
    return make_interval(name, options, seed);
  }
  if (name == "boss" || name == "cboss") return make_boss(name, options, seed);
  if (name == "stc") return make_stc(options, seed);
  if (name == "ee") return make_ee(options, seed);
  if (name == "pf") return make_pf(options, seed);
  return make_nn(name, options);
}

}  // namespace tsc
