#include <gtest/gtest.h>

#include <atomic>
#include <stdexcept>
#include <vector>

#include "tsc/interval.hpp"
#include "tsc/parallel.hpp"
#include "tsc/synthetic.hpp"

using namespace tsc;

namespace {

struct ThreadCap {
  explicit ThreadCap(std::size_t n) : saved(max_threads()) { set_max_threads(n); }
  ~ThreadCap() { set_max_threads(saved); }
  std::size_t saved;
};

}  // namespace

TEST(ParallelFor, EachIndexOnce) {
  ThreadCap cap(4);
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  parallel_for(0, [](std::size_t) { FAIL(); });
}

TEST(ParallelFor, RethrowsFirstError) {
  ThreadCap cap(3);
  EXPECT_THROW(parallel_for(50, [](std::size_t i) {
                 if (i == 17) throw std::runtime_error("boom");
               }),
               std::runtime_error);
}

TEST(ParallelFor, ResultsIndependentOfThreadCount) {
  const auto problem = random_problem(1, 20, 20, 30, 2);
  TsfConfig config;
  config.n_trees = 30;
  std::vector<std::vector<double>> serial;
  {
    ThreadCap cap(1);
    serial = interval_predict_proba(tsf_fit(problem.train, config), problem.test);
  }
  ThreadCap cap(4);
  EXPECT_EQ(interval_predict_proba(tsf_fit(problem.train, config), problem.test), serial);
}
