#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "tsc/metrics.hpp"

namespace bench {

struct CompareRequest {
  std::filesystem::path results_dir;
  std::vector<std::string> classifiers;
  tsc::Metric metric = tsc::Metric::Accuracy;
  double alpha = 0.05;
};

/// Writes the metric matrix, average ranks, pairwise tests, cliques and
/// scatter rows as sectioned CSV. Problems are those every classifier has
/// results for; each cell averages the resamples common to all classifiers.
void write_comparison(const CompareRequest& request, std::ostream& out);

}  // namespace bench
