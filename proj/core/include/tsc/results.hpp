#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace tsc {

/// One classifier's test predictions on one resample of one problem.
struct ClassifierResults {
  std::string problem_name;
  std::string classifier_name;
  std::size_t resample_id = 0;
  std::string parameter_text;
  std::vector<std::size_t> true_class;
  std::vector<std::size_t> predicted_class;
  std::vector<std::vector<double>> probabilities;
  std::int64_t build_time_ns = 0;
  std::int64_t test_time_ns = 0;

  [[nodiscard]] std::size_t size() const noexcept { return true_class.size(); }
  [[nodiscard]] double accuracy() const;
};

/// Text form:
///   problem,classifier,test,resampleId
///   parameter text
///   accuracy,buildTimeNs,testTimeNs
///   trueIdx,predIdx,,p_0,...,p_{c-1}     (one line per case, 6 decimals)
std::string format_results(const ClassifierResults& results);

/// Throws MalformedResults.
ClassifierResults parse_results(std::string_view text);

/// <out>/<classifier>/Predictions/<problem>/testFold<resample>.csv
std::filesystem::path results_path(const std::filesystem::path& out_dir, std::string_view classifier,
                                   std::string_view problem, std::size_t resample_id);

/// Writes to results_path, creating directories. Returns the file written.
std::filesystem::path write_results(const std::filesystem::path& out_dir, const ClassifierResults& results);

/// Throws DatasetNotFound when the file is missing, MalformedResults.
ClassifierResults load_results(const std::filesystem::path& path);

}  // namespace tsc
