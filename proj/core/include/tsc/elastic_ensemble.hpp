#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsc/dataset.hpp"
#include "tsc/nearest_neighbour.hpp"

namespace tsc {

struct EeConfig {
  double proportion_of_param_options = 1.0;
  double proportion_of_train_in_param_finding = 1.0;
  std::uint64_t seed = 0;
};

struct EeMember {
  std::string name;
  NnModel nn;
  double cv_accuracy = 0.0;
};

/// One member per constituent, in ee_constituents() order.
struct EeModel {
  std::vector<EeMember> members;
  std::vector<std::string> class_labels;
  std::size_t series_length = 0;
};

/// Tuned constituents run loocv_tune with a generator seeded from
/// (seed, constituent index); fixed ones are scored by full leave-one-out.
EeModel ee_fit(const Dataset& train, const EeConfig& config);

/// Each member votes its 1NN class with weight cv_accuracy. When every
/// weight is zero the members vote equally.
std::vector<std::vector<double>> ee_predict_proba(const EeModel& model, const Dataset& test);

}  // namespace tsc
