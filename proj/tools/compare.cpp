#include "compare.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "tsc/comparison.hpp"
#include "tsc/error.hpp"
#include "tsc/results.hpp"

namespace bench {

namespace {

namespace fs = std::filesystem;

// problem -> resample id -> metric value, for one classifier.
using Scores = std::map<std::string, std::map<std::size_t, double>>;

Scores load_scores(const fs::path& results_dir, const std::string& classifier, tsc::Metric metric) {
  Scores scores;
  const auto root = results_dir / classifier / "Predictions";
  if (!fs::is_directory(root)) {
    throw tsc::Error(tsc::ErrorCode::DatasetNotFound, "no results for " + classifier + " under " + root.string());
  }
  for (const auto& problem_dir : fs::directory_iterator(root)) {
    if (!problem_dir.is_directory()) continue;
    for (const auto& file : fs::directory_iterator(problem_dir.path())) {
      const auto name = file.path().filename().string();
      if (name.rfind("testFold", 0) != 0 || file.path().extension() != ".csv") continue;
      const auto results = tsc::load_results(file.path());
      const std::size_t n_classes = results.probabilities.empty() ? 0 : results.probabilities.front().size();
      const auto metrics = tsc::compute_metrics(results, n_classes);
      scores[problem_dir.path().filename().string()][results.resample_id] = tsc::metric_value(metrics, metric);
    }
  }
  return scores;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

void write_comparison(const CompareRequest& request, std::ostream& out) {
  const auto& names = request.classifiers;
  std::vector<Scores> per_classifier;
  for (const auto& c : names) per_classifier.push_back(load_scores(request.results_dir, c, request.metric));

  std::vector<std::string> problems;
  tsc::MetricMatrix matrix;
  for (const auto& [problem, _] : per_classifier.front()) {
    std::set<std::size_t> common;
    bool everywhere = true;
    for (std::size_t k = 0; k < per_classifier.size() && everywhere; ++k) {
      const auto it = per_classifier[k].find(problem);
      if (it == per_classifier[k].end()) {
        everywhere = false;
        break;
      }
      std::set<std::size_t> ids;
      for (const auto& [id, v] : it->second) ids.insert(id);
      if (k == 0) {
        common = ids;
      } else {
        std::set<std::size_t> both;
        std::set_intersection(common.begin(), common.end(), ids.begin(), ids.end(), std::inserter(both, both.end()));
        common = std::move(both);
      }
    }
    if (!everywhere || common.empty()) continue;
    std::vector<double> row;
    for (const auto& scores : per_classifier) {
      double sum = 0.0;
      for (auto id : common) sum += scores.at(problem).at(id);
      row.push_back(sum / static_cast<double>(common.size()));
    }
    problems.push_back(problem);
    matrix.push_back(std::move(row));
  }

  const auto summary = tsc::average_ranks_and_cliques(matrix, request.alpha, tsc::higher_is_better(request.metric));
  out << "# metric_matrix," << tsc::to_string(request.metric) << '\n' << "problem";
  for (const auto& c : names) out << ',' << c;
  out << '\n';
  for (std::size_t d = 0; d < problems.size(); ++d) {
    out << problems[d];
    for (double v : matrix[d]) out << ',' << num(v);
    out << '\n';
  }

  out << "\n# average_ranks\nclassifier,average_rank\n";
  for (std::size_t c = 0; c < names.size(); ++c) out << names[c] << ',' << num(summary.average_ranks[c]) << '\n';

  out << "\n# pairwise\nclassifier_a,classifier_b,p_value,holm_adjusted_p,significant,wins,draws,losses\n";
  for (const auto& p : summary.pairs) {
    out << names[p.a] << ',' << names[p.b] << ',' << num(p.p_value) << ',' << num(p.adjusted_p) << ','
        << (p.significant ? "true" : "false") << ',' << p.wdl.wins << ',' << p.wdl.draws << ',' << p.wdl.losses
        << '\n';
  }

  out << "\n# cliques\nmembers\n";
  for (const auto& clique : summary.cliques) {
    for (std::size_t i = 0; i < clique.size(); ++i) out << (i ? ";" : "") << names[clique[i]];
    out << '\n';
  }

  out << "\n# scatter\nclassifier_a,classifier_b,problem,x,y\n";
  for (const auto& p : summary.pairs) {
    for (std::size_t d = 0; d < problems.size(); ++d) {
      out << names[p.a] << ',' << names[p.b] << ',' << problems[d] << ',' << num(matrix[d][p.a]) << ','
          << num(matrix[d][p.b]) << '\n';
    }
  }
}

}  // namespace bench
