#include <gtest/gtest.h>

#include <cmath>

#include "test_helpers.hpp"
#include "tsc/shapelet.hpp"
#include "tsc/synthetic.hpp"

using namespace tsc;

TEST(SubsequenceDistance, ExactMatchIsZero) {
  const std::vector<double> s{-1.224744871391589, 0.0, 1.224744871391589};  // znorm([1,2,3])
  const std::vector<double> series{9, 9, 1, 2, 3, 9};
  EXPECT_NEAR(subsequence_distance(s, series), 0.0, 1e-12);
  // Any affine image of the match is also a match.
  const std::vector<double> scaled{9, 9, 10, 20, 30, 9};
  EXPECT_NEAR(subsequence_distance(s, scaled), 0.0, 1e-12);
}

TEST(SubsequenceDistance, FlatWindowIsZeroVector) {
  const std::vector<double> s{1.0, -1.0};
  const std::vector<double> flat{4, 4, 4};
  EXPECT_DOUBLE_EQ(subsequence_distance(s, flat), 1.0);
}

TEST(SubsequenceDistance, Errors) {
  const std::vector<double> s{1, 2, 3}, series{1, 2}, empty;
  EXPECT_TSC_ERROR(subsequence_distance(s, series), ShapeletTooLong);
  EXPECT_TSC_ERROR(subsequence_distance(empty, series), ShapeletTooLong);
}

TEST(ShapeletQuality, PerfectSplitIsOneBit) {
  const std::vector<double> d{1, 2, 3, 4};
  const std::vector<std::size_t> y{0, 0, 1, 1};
  EXPECT_NEAR(shapelet_quality(d, y, 0), 1.0, 1e-12);
  const std::vector<double> same{1, 1, 1, 1};
  EXPECT_EQ(shapelet_quality(same, y, 0), 0.0);
  const std::vector<double> one{1};
  const std::vector<std::size_t> y1{0};
  EXPECT_TSC_ERROR(shapelet_quality(one, y1, 0), DegenerateLabels);
  const std::vector<std::size_t> pure{1, 1, 1, 1};
  EXPECT_TSC_ERROR(shapelet_quality(d, pure, 1), DegenerateLabels);
}

TEST(ShapeletQuality, OneVsRestThreeClasses) {
  const std::vector<double> d{1, 2, 3, 4, 5, 6};
  const std::vector<std::size_t> y{0, 0, 1, 1, 2, 2};
  // class 0 vs rest: clean split 2|4, gain = H(1/3).
  const double h = -(1.0 / 3) * std::log2(1.0 / 3) - (2.0 / 3) * std::log2(2.0 / 3);
  EXPECT_NEAR(shapelet_quality(d, y, 0), h, 1e-12);
}

TEST(ShapeletSearch, PlantedSpikeFound) {
  const auto problem = planted_spike_problem(3);
  StcConfig config;
  config.max_candidates = 2000;
  config.seed = 2;
  const auto shapelets = random_shapelet_search(problem.train, config);
  ASSERT_FALSE(shapelets.empty());
  EXPECT_NEAR(shapelets.front().quality, 1.0, 1e-12);  // balanced two classes
  for (std::size_t i = 1; i < shapelets.size(); ++i) EXPECT_GE(shapelets[i - 1].quality, shapelets[i].quality);
}

TEST(ShapeletSearch, NoSameCaseOverlaps) {
  const auto problem = random_problem(4, 12, 2, 30, 3);
  StcConfig config;
  config.max_candidates = 300;
  const auto shapelets = random_shapelet_search(problem.train, config);
  EXPECT_LE(shapelets.size(), 120u);
  for (std::size_t i = 0; i < shapelets.size(); ++i) {
    for (std::size_t j = i + 1; j < shapelets.size(); ++j) {
      const auto& a = shapelets[i];
      const auto& b = shapelets[j];
      if (a.source_case != b.source_case) continue;
      const bool disjoint = a.source_start + a.values.size() <= b.source_start ||
                            b.source_start + b.values.size() <= a.source_start;
      EXPECT_TRUE(disjoint);
    }
  }
}

TEST(ShapeletSearch, DeterministicAndContracts) {
  const auto problem = random_problem(5, 10, 2, 25, 2);
  StcConfig config;
  config.max_candidates = 50;
  config.seed = 11;
  std::size_t evaluated = 0;
  const auto a = random_shapelet_search(problem.train, config, &evaluated);
  EXPECT_EQ(evaluated, 50u);
  EXPECT_EQ(a, random_shapelet_search(problem.train, config));

  config.max_candidates = 1;
  EXPECT_EQ(random_shapelet_search(problem.train, config).size(), 1u);
  config.max_candidates = 0;
  EXPECT_TSC_ERROR(random_shapelet_search(problem.train, config), ContractTooSmall);
  config.max_candidates = 10;
  config.min_length = 30;
  EXPECT_TSC_ERROR(random_shapelet_search(problem.train, config), InvalidConfig);
}

TEST(ShapeletSearch, TimeContractStops) {
  const auto problem = random_problem(6, 10, 2, 25, 2);
  StcConfig config;
  config.contract_minutes = 0.002;  // 120 ms
  std::size_t evaluated = 0;
  const auto s = random_shapelet_search(problem.train, config, &evaluated);
  EXPECT_GT(evaluated, 0u);
  EXPECT_FALSE(s.empty());
}

TEST(ShapeletSearch, LengthBounds) {
  const auto problem = random_problem(7, 10, 2, 40, 2);
  StcConfig config;
  config.max_candidates = 100;
  config.min_length = 5;
  config.max_length = 9;
  for (const auto& s : random_shapelet_search(problem.train, config)) {
    EXPECT_GE(s.values.size(), 5u);
    EXPECT_LE(s.values.size(), 9u);
    EXPECT_LE(s.source_start + s.values.size(), 40u);
  }
}

TEST(Stc, TransformAndPredict) {
  const auto problem = planted_spike_problem(8);
  StcConfig config;
  config.max_candidates = 200;
  config.forest_trees = 50;
  const auto model = stc_fit(problem.train, config);
  const auto X = shapelet_transform(model.shapelets, problem.test);
  EXPECT_EQ(X.rows(), problem.test.size());
  EXPECT_EQ(X.cols(), model.shapelets.size());
  const auto proba = stc_predict_proba(model, problem.test);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < proba.size(); ++i) {
    EXPECT_NEAR(proba[i][0] + proba[i][1], 1.0, 1e-9);
    correct += argmax(proba[i]) == problem.test.class_index(i) ? 1 : 0;
  }
  EXPECT_GE(correct, 36u);
}
