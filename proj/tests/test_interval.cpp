#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "test_helpers.hpp"
#include "tsc/interval.hpp"
#include "tsc/synthetic.hpp"

using namespace tsc;

namespace {

double accuracy(const std::vector<std::vector<double>>& proba, const Dataset& data) {
  std::size_t correct = 0;
  for (std::size_t i = 0; i < data.size(); ++i) correct += argmax(proba[i]) == data.class_index(i) ? 1 : 0;
  return static_cast<double>(correct) / static_cast<double>(data.size());
}

}  // namespace

TEST(SampleIntervals, BoundsFuzz) {
  Rng rng{1};
  const auto intervals = sample_intervals(100, 10000, 3, rng);
  ASSERT_EQ(intervals.size(), 10000u);
  for (const auto& iv : intervals) {
    EXPECT_LE(iv.start, 97u);
    EXPECT_GE(iv.length, 3u);
    EXPECT_LE(iv.start + iv.length, 100u);
  }
}

TEST(SampleIntervals, ForcedAndDeterministic) {
  Rng rng{2};
  for (const auto& iv : sample_intervals(7, 20, 7, rng)) EXPECT_EQ(iv, (Interval{0, 7}));
  Rng a{3}, b{3};
  EXPECT_EQ(sample_intervals(50, 30, 3, a), sample_intervals(50, 30, 3, b));
  EXPECT_TSC_ERROR(sample_intervals(5, 1, 6, a), IntervalInfeasible);
  EXPECT_TSC_ERROR(sample_intervals(5, 1, 0, a), IntervalInfeasible);
}

TEST(Tsf, SqrtIntervalCount) {
  const auto problem = random_problem(4, 10, 2, 144, 2);
  TsfConfig config;
  config.n_trees = 5;
  const auto model = tsf_fit(problem.train, config);
  ASSERT_EQ(model.members.size(), 5u);
  for (const auto& m : model.members) {
    EXPECT_EQ(m.intervals.size(), 12u);
    EXPECT_EQ(m.tree.n_features(), 36u);
  }
}

TEST(Tsf, ConstantClassesMemorised) {
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;
  for (int i = 0; i < 40; ++i) {
    rows.emplace_back(20, i % 2 ? 1.0 : 0.0);
    labels.push_back(i % 2 ? "b" : "a");
  }
  const auto data = test::make_dataset(rows, labels);
  const auto model = tsf_fit(data, {});
  EXPECT_EQ(model.members.size(), 100u);
  const auto proba = interval_predict_proba(model, data);
  EXPECT_EQ(accuracy(proba, data), 1.0);
  for (const auto& p : proba) EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-9);
}

TEST(Tsf, SameSeedSamePredictions) {
  const auto problem = random_problem(5, 20, 20, 30, 3);
  TsfConfig config;
  config.n_trees = 20;
  config.seed = 9;
  EXPECT_EQ(interval_predict_proba(tsf_fit(problem.train, config), problem.test),
            interval_predict_proba(tsf_fit(problem.train, config), problem.test));
}

TEST(Tsf, ComposedPathIsIdentical) {
  for (std::uint64_t s = 0; s < 3; ++s) {
    const auto problem = random_problem(s, 20, 20, 25 + 10 * s, 2 + s);
    TsfConfig config;
    config.n_trees = 25;
    config.seed = s;
    const auto direct = tsf_fit(problem.train, config);
    const auto composed = composed_fit(problem.train, tsf_pipeline_spec(config));
    ASSERT_EQ(direct.members.size(), composed.members.size());
    for (std::size_t i = 0; i < direct.members.size(); ++i) {
      EXPECT_EQ(direct.members[i].intervals, composed.members[i].intervals);
    }
    EXPECT_EQ(interval_predict_proba(direct, problem.test), interval_predict_proba(composed, problem.test));
  }
}

TEST(Tsf, LengthMismatch) {
  const auto problem = random_problem(6, 10, 4, 20, 2);
  const auto other = random_problem(6, 10, 4, 21, 2);
  TsfConfig config;
  config.n_trees = 2;
  const auto model = tsf_fit(problem.train, config);
  EXPECT_TSC_ERROR(interval_predict_proba(model, other.test), LengthMismatch);
}

TEST(Rise, FirstMemberUsesWholeSeries) {
  const auto problem = spectral_problem(1);
  RiseConfig config;
  config.n_trees = 10;
  const auto model = rise_fit(problem.train, config);
  ASSERT_EQ(model.members.size(), 10u);
  EXPECT_EQ(model.members[0].intervals, (std::vector<Interval>{{0, 128}}));
  for (const auto& m : model.members) {
    ASSERT_EQ(m.intervals.size(), 1u);
    const std::size_t len = m.intervals[0].length;
    EXPECT_GE(len, 5u);
    EXPECT_EQ(m.tree.n_features(), std::min<std::size_t>(len - 1, 100) + len / 2);
  }
}

TEST(Rise, SpectralTrainingAccuracy) {
  const auto problem = spectral_problem(2);
  const auto model = rise_fit(problem.train, {});
  EXPECT_EQ(model.members.size(), 50u);
  EXPECT_EQ(accuracy(interval_predict_proba(model, problem.train), problem.train), 1.0);
}

TEST(Rise, ConstantDataIsSafe) {
  const auto problem = all_constant_problem();
  const auto model = rise_fit(problem.train, {});
  for (const auto& p : interval_predict_proba(model, problem.test)) {
    for (double v : p) EXPECT_TRUE(std::isfinite(v));
    EXPECT_NEAR(p[0] + p[1], 1.0, 1e-9);
  }
}

TEST(Rise, InvalidConfig) {
  const auto problem = spectral_problem(3);
  RiseConfig config;
  config.min_interval_length = 1;
  EXPECT_TSC_ERROR(rise_fit(problem.train, config), InvalidConfig);
}

TEST(Composed, EmptyFeatureListRejected) {
  const auto problem = random_problem(7, 10, 2, 20, 2);
  auto spec = tsf_pipeline_spec({});
  spec.feature_functions.clear();
  EXPECT_TSC_ERROR(composed_fit(problem.train, spec), InvalidConfig);
}

TEST(Composed, FeatureWidths) {
  EXPECT_EQ(feature_width(FeatureFunction::Mean, 10, 100), 1u);
  EXPECT_EQ(feature_width(FeatureFunction::Acf, 10, 100), 9u);
  EXPECT_EQ(feature_width(FeatureFunction::Acf, 300, 100), 100u);
  EXPECT_EQ(feature_width(FeatureFunction::PowerSpectrum, 11, 100), 5u);
}

TEST(Composed, RiseSpecMatchesRiseStochastically) {
  double direct = 0.0, composed = 0.0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto problem = spectral_problem(100 + s);
    RiseConfig config;
    config.n_trees = 20;
    config.seed = s;
    direct += accuracy(interval_predict_proba(rise_fit(problem.train, config), problem.test), problem.test);
    composed += accuracy(
        interval_predict_proba(composed_fit(problem.train, rise_pipeline_spec(config)), problem.test), problem.test);
  }
  EXPECT_NEAR(direct / 10.0, composed / 10.0, 0.05);
}
