#include "tsc/elastic_ensemble.hpp"

#include <numeric>

#include "tsc/error.hpp"
#include "tsc/parallel.hpp"

namespace tsc {

EeModel ee_fit(const Dataset& train, const EeConfig& config) {
  if (train.size() < 2) throw Error(ErrorCode::EmptyTrainingSet, "the elastic ensemble needs two training cases");
  const auto& constituents = ee_constituents();
  const GridContext context = grid_context(train);
  const TuningEffort effort{config.proportion_of_param_options, config.proportion_of_train_in_param_finding};

  EeModel model;
  model.class_labels = train.class_labels();
  model.series_length = train.series_length();
  model.members.resize(constituents.size());
  parallel_for(constituents.size(), [&](std::size_t k) {
    const auto& c = constituents[k];
    EeMember& member = model.members[k];
    member.name = c.name;
    if (c.tuned) {
      Rng rng = make_rng(config.seed, k);
      const auto tuned = loocv_tune(train, ee_parameter_grid(c.measure, context), effort, rng);
      member.nn = nn_fit(train, {c.measure, tuned.params});
      member.cv_accuracy = tuned.cv_accuracy;
    } else {
      member.nn = nn_fit(train, {c.measure, c.fixed});
      std::vector<std::size_t> all(train.size());
      std::iota(all.begin(), all.end(), 0);
      member.cv_accuracy = loo_nn_accuracy(member.nn.spec, member.nn.train_series, member.nn.train_labels, all);
    }
  });
  return model;
}

std::vector<std::vector<double>> ee_predict_proba(const EeModel& model, const Dataset& test) {
  if (test.series_length() != model.series_length) {
    throw Error(ErrorCode::LengthMismatch, "test length differs from training length");
  }
  double total = 0.0;
  for (const auto& m : model.members) total += m.cv_accuracy;
  const bool equal_votes = total <= 0.0;

  std::vector<std::vector<double>> out(test.size(), std::vector<double>(model.class_labels.size(), 0.0));
  for (std::size_t i = 0; i < test.size(); ++i) {
    for (const auto& m : model.members) {
      const double w = equal_votes ? 1.0 : m.cv_accuracy;
      if (w == 0.0) continue;
      out[i][nn1_classify(m.nn, test.series(i)).class_index] += w;
    }
    const double sum = std::accumulate(out[i].begin(), out[i].end(), 0.0);
    for (auto& p : out[i]) p /= sum;
  }
  return out;
}

}  // namespace tsc
