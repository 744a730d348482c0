#include "tsc/experiment.hpp"

#include <chrono>
#include <json.hpp>

#include "tsc/error.hpp"
#include "tsc/random.hpp"
#include "tsc/tree.hpp"
#include "tsc/ts_io.hpp"

namespace tsc {

namespace {

std::int64_t elapsed_ns(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

ExperimentOutcome run_experiment(const ExperimentConfig& config) {
  auto classifier = make_classifier(config.classifier, config.options, derive_seed(config.seed, config.resample_id));

  const auto dir = config.data_dir / config.problem;
  const auto train = load_ts_file(dir / (config.problem + "_TRAIN.ts"));
  const auto test = load_ts_file(dir / (config.problem + "_TEST.ts"));
  const auto split = stratified_resample(train, test, config.resample_id, config.seed);

  auto start = std::chrono::steady_clock::now();
  classifier->fit(split.train);
  const std::int64_t build_ns = elapsed_ns(start);

  start = std::chrono::steady_clock::now();
  auto proba = classifier->predict_proba(split.test);
  const std::int64_t test_ns = elapsed_ns(start);

  ExperimentOutcome out;
  out.n_classes = split.train.n_classes();
  auto& r = out.results;
  r.problem_name = config.problem;
  r.classifier_name = config.classifier;
  r.resample_id = config.resample_id;
  r.parameter_text = classifier->parameter_text();
  r.build_time_ns = build_ns;
  r.test_time_ns = test_ns;
  r.true_class = split.test.class_indices();
  for (const auto& p : proba) r.predicted_class.push_back(argmax(p));
  r.probabilities = std::move(proba);
  out.metrics = compute_metrics(r, out.n_classes);
  if (config.out_dir) out.results_file = write_results(*config.out_dir, r);
  return out;
}

std::string summary_json(const ExperimentOutcome& outcome) {
  const auto& r = outcome.results;
  nlohmann::json j = {
      {"problem", r.problem_name},
      {"classifier", r.classifier_name},
      {"resample", r.resample_id},
      {"n_test", r.size()},
      {"accuracy", outcome.metrics.accuracy},
      {"balanced_accuracy", outcome.metrics.balanced_accuracy},
      {"auc", outcome.metrics.auc},
      {"nll", outcome.metrics.nll},
      {"build_time_ns", r.build_time_ns},
      {"test_time_ns", r.test_time_ns},
      {"results_file", outcome.results_file ? outcome.results_file->string() : ""},
  };
  return j.dump();
}

}  // namespace tsc
