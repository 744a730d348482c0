#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace tsc {

struct Case {
  std::vector<double> values;
  std::string label;

  friend bool operator==(const Case&, const Case&) = default;
};

/// Labeled collection of equal-length univariate series.
///
/// Class indices follow the order of `class_labels`, which is also the column
/// order of every probability vector produced by the classifiers. Instances
/// are immutable once constructed; the constructor validates every invariant
/// and throws tsc::Error(InvalidDataset / LengthMismatch / UnknownLabel /
/// NonNumericValue) otherwise.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::string problem_name, std::vector<std::string> class_labels, std::size_t series_length,
          std::vector<Case> cases);

  [[nodiscard]] const std::string& problem_name() const noexcept { return problem_name_; }
  [[nodiscard]] const std::vector<std::string>& class_labels() const noexcept { return class_labels_; }
  [[nodiscard]] std::size_t n_classes() const noexcept { return class_labels_.size(); }
  [[nodiscard]] std::size_t series_length() const noexcept { return series_length_; }
  [[nodiscard]] std::size_t size() const noexcept { return cases_.size(); }
  [[nodiscard]] bool empty() const noexcept { return cases_.empty(); }

  [[nodiscard]] const std::vector<Case>& cases() const noexcept { return cases_; }
  [[nodiscard]] const Case& operator[](std::size_t i) const { return cases_[i]; }
  [[nodiscard]] std::span<const double> series(std::size_t i) const { return cases_[i].values; }
  [[nodiscard]] std::size_t class_index(std::size_t i) const { return class_indices_[i]; }
  [[nodiscard]] const std::vector<std::size_t>& class_indices() const noexcept { return class_indices_; }

  /// Index of `label` in class_labels; throws UnknownLabel.
  [[nodiscard]] std::size_t index_of_label(const std::string& label) const;

  /// Per-class case counts, indexed by class index.
  [[nodiscard]] std::vector<std::size_t> class_counts() const;

  /// New dataset with the same metadata holding cases[indices...].
  [[nodiscard]] Dataset subset(std::span<const std::size_t> indices) const;

  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.problem_name_ == b.problem_name_ && a.class_labels_ == b.class_labels_ &&
           a.series_length_ == b.series_length_ && a.cases_ == b.cases_;
  }

 private:
  std::string problem_name_;
  std::vector<std::string> class_labels_;
  std::size_t series_length_ = 0;
  std::vector<Case> cases_;
  std::vector<std::size_t> class_indices_;
};

/// Throws LengthMismatch unless `test` has the train series length and the
/// same class labels.
void require_compatible(const Dataset& train, const Dataset& test);

}  // namespace tsc
