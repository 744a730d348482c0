#pragma once

#include <cstddef>
#include <cstdint>

#include "tsc/dataset.hpp"

namespace tsc {

/// Small seeded two-class problems used by tests, benchmarks and the
/// acceptance suite. Each has 40 train and 40 test cases, classes "a" and
/// "b" alternating.
struct SyntheticProblem {
  Dataset train;
  Dataset test;
};

/// Length 64, noise sd 0.3 around 0. Class "b" sits at level +2 for its
/// first half.
SyntheticProblem constant_level_problem(std::uint64_t seed);

/// Length 128, unit sine with random phase, period 8 ("a") or 32 ("b"),
/// noise sd 0.3.
SyntheticProblem spectral_problem(std::uint64_t seed);

/// Length 64, noise sd 0.3; class "b" has a +10 spike at a random position
/// in [8, 55].
SyntheticProblem planted_spike_problem(std::uint64_t seed);

/// Length 64, noise sd 0.3; class "b" carries a 32-point sine burst
/// (period 6, amplitude 2) starting at a random position.
SyntheticProblem planted_burst_problem(std::uint64_t seed);

/// Every value of every case is the same constant.
SyntheticProblem all_constant_problem(std::size_t n_cases = 20, std::size_t length = 32);

/// Gaussian noise with class-dependent mean and slope, for equivalence and
/// determinism checks on arbitrary shapes.
SyntheticProblem random_problem(std::uint64_t seed, std::size_t n_train, std::size_t n_test, std::size_t length,
                                std::size_t n_classes);

}  // namespace tsc
