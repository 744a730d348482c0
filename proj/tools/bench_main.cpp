#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "compare.hpp"
#include "tsc/distances.hpp"
#include "tsc/error.hpp"
#include "tsc/experiment.hpp"
#include "tsc/parallel.hpp"
#include "tsc/ts_io.hpp"

namespace {

template <typename T>
void set_if(const CLI::Option* opt, std::optional<T>& target, const T& value) {
  if (opt->count() > 0) target = value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time series classification benchmark harness"};
  app.require_subcommand(1);

  std::size_t threads = 1;
  app.add_option("--threads", threads, "Worker thread cap (0 = all cores)")->capture_default_str();

  // run
  auto* run = app.add_subcommand("run", "Fit and evaluate one classifier on one resample");
  tsc::ExperimentConfig config;
  std::string out_dir = "results";
  double contract_minutes = 0.0;
  std::size_t n_trees = 0, n_parameter_samples = 0, max_ensemble_size = 0, max_candidates = 0, forest_trees = 0,
              n_stump_evaluations = 0;
  double p_options = 1.0, p_train = 1.0;
  std::string param_text;
  run->add_option("--classifier", config.classifier, "Classifier name")->required();
  run->add_option("--data-dir", config.data_dir, "Directory holding <problem>/<problem>_TRAIN.ts")->required();
  run->add_option("--problem", config.problem, "Problem name")->required();
  run->add_option("--resample", config.resample_id, "Resample id (0 = original split)")->capture_default_str();
  run->add_option("--seed", config.seed, "Experiment seed")->capture_default_str();
  run->add_option("--out", out_dir, "Results directory")->capture_default_str();
  run->add_option("--threads", threads, "Worker thread cap (0 = all cores)");
  auto* o_contract = run->add_option("--contract-minutes", contract_minutes, "Time contract (cboss, stc)");
  auto* o_trees = run->add_option("--n-trees", n_trees, "Ensemble size (tsf, rise, pf)");
  auto* o_samples = run->add_option("--n-parameter-samples", n_parameter_samples, "cBOSS parameter samples");
  auto* o_max_ens = run->add_option("--max-ensemble-size", max_ensemble_size, "cBOSS ensemble cap");
  auto* o_cands = run->add_option("--max-candidates", max_candidates, "STC candidate contract");
  auto* o_forest = run->add_option("--forest-trees", forest_trees, "STC forest size");
  auto* o_stumps = run->add_option("--n-stump-evaluations", n_stump_evaluations, "PF candidate splits per node");
  auto* o_popt = run->add_option("--proportion-of-param-options", p_options, "EE grid fraction");
  auto* o_ptrain = run->add_option("--proportion-of-train-in-param-finding", p_train, "EE train fraction");
  auto* o_param = run->add_option("--param", param_text, "Distance parameters for nn-*, e.g. w=0.1");

  // compare
  auto* compare = app.add_subcommand("compare", "Rank and test classifiers over saved results");
  bench::CompareRequest request;
  std::string classifiers_csv, metric_name = "acc", compare_out;
  compare->add_option("--results-dir", request.results_dir, "Results directory")->required();
  compare->add_option("--classifiers", classifiers_csv, "Comma separated classifier names")->required();
  compare->add_option("--metric", metric_name, "acc|balacc|auc|nll")->capture_default_str();
  compare->add_option("--alpha", request.alpha, "Significance level")->capture_default_str();
  compare->add_option("--out", compare_out, "CSV output file (stdout when omitted)");

  // distance
  auto* dist = app.add_subcommand("distance", "Distance between two cases of a .ts file");
  std::string measure_name, dist_params, file;
  std::size_t i = 0, j = 0;
  dist->add_option("--measure", measure_name, "Distance measure")->required();
  dist->add_option("--params", dist_params, "k=v[,k=v]");
  dist->add_option("--file", file, ".ts file")->required();
  dist->add_option("--i", i, "First case index")->required();
  dist->add_option("--j", j, "Second case index")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    tsc::set_max_threads(threads);
    if (run->parsed()) {
      auto& o = config.options;
      set_if(o_contract, o.contract_minutes, contract_minutes);
      set_if(o_trees, o.n_trees, n_trees);
      set_if(o_samples, o.n_parameter_samples, n_parameter_samples);
      set_if(o_max_ens, o.max_ensemble_size, max_ensemble_size);
      set_if(o_cands, o.max_candidates, max_candidates);
      set_if(o_forest, o.forest_trees, forest_trees);
      set_if(o_stumps, o.n_stump_evaluations, n_stump_evaluations);
      set_if(o_popt, o.proportion_of_param_options, p_options);
      set_if(o_ptrain, o.proportion_of_train_in_param_finding, p_train);
      set_if(o_param, o.distance_params, param_text);
      config.out_dir = out_dir;
      const auto outcome = tsc::run_experiment(config);
      std::cout << tsc::summary_json(outcome) << '\n';
    } else if (compare->parsed()) {
      request.metric = tsc::parse_metric(metric_name);
      for (const auto& name : CLI::detail::split(classifiers_csv, ',')) {
        if (!name.empty()) request.classifiers.push_back(name);
      }
      if (compare_out.empty()) {
        bench::write_comparison(request, std::cout);
      } else {
        std::ofstream out(compare_out);
        bench::write_comparison(request, out);
      }
    } else if (dist->parsed()) {
      const auto data = tsc::load_ts_file(file);
      if (i >= data.size() || j >= data.size()) {
        throw tsc::Error(tsc::ErrorCode::InvalidDataset, "case index out of range");
      }
      const auto spec = tsc::parse_distance_spec(tsc::parse_measure(measure_name), dist_params);
      std::printf("%.17g\n", tsc::distance(spec, data.series(i), data.series(j)));
    }
  } catch (const tsc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
